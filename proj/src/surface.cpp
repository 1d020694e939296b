#include "gw/surface.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace gw {

StableCurveGraph::StableCurveGraph(std::vector<Component> components,
                                   std::vector<int> marked,
                                   std::vector<NodalPair> nodes)
    : components_(std::move(components)),
      marked_(std::move(marked)),
      nodes_(std::move(nodes)) {
  const int nc = int(components_.size());
  if (nc == 0) throw GraphError("graph needs at least one component");
  for (const Component& c : components_) {
    if (c.genus < 0) throw GraphError("negative genus");
    if (c.area < 0) throw GraphError("negative area");
  }
  for (int c : marked_)
    if (c < 0 || c >= nc) throw GraphError("marked point on missing component");

  std::set<HalfEdge> seen;
  for (const NodalPair& p : nodes_) {
    if (p.a == p.b) throw GraphError("nodal pair endpoints must be distinct half-edges");
    for (const HalfEdge& h : {p.a, p.b}) {
      if (h.comp < 0 || h.comp >= nc) throw GraphError("half-edge on missing component");
      if (!seen.insert(h).second) throw GraphError("half-edge shared between nodal pairs");
    }
  }
  std::sort(nodes_.begin(), nodes_.end());

  // Connectivity of the incidence graph.
  std::vector<int> root(size_t(nc), 0);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[size_t(x)] != x) x = root[size_t(x)] = root[size_t(root[size_t(x)])];
    return x;
  };
  for (const NodalPair& p : nodes_) root[size_t(find(p.a.comp))] = find(p.b.comp);
  for (int c = 0; c < nc; ++c)
    if (find(c) != find(0)) throw GraphError("incidence graph is disconnected");
}

int StableCurveGraph::marked_component(int label) const {
  if (label < 1 || label > k()) throw GraphError("marked label out of range");
  return marked_[size_t(label - 1)];
}

int StableCurveGraph::marked_count_on(int c) const {
  return int(std::count(marked_.begin(), marked_.end(), c));
}

int StableCurveGraph::nodal_halfedges_on(int c) const {
  int n = 0;
  for (const NodalPair& p : nodes_) n += (p.a.comp == c) + (p.b.comp == c);
  return n;
}

Rational StableCurveGraph::total_area() const {
  Rational s = 0;
  for (const Component& c : components_) s += c.area;
  return s;
}

int StableCurveGraph::total_chern() const {
  int s = 0;
  for (const Component& c : components_) s += c.chern;
  return s;
}

int StableCurveGraph::fresh_slot(int c) const {
  int s = 0;
  for (const NodalPair& p : nodes_) {
    if (p.a.comp == c) s = std::max(s, p.a.slot + 1);
    if (p.b.comp == c) s = std::max(s, p.b.slot + 1);
  }
  return s;
}

std::string to_string(GhostType t) {
  switch (t) {
    case GhostType::Type01: return "type01";
    case GhostType::Type02: return "type02";
    case GhostType::Type03: return "type03";
    case GhostType::Type11: return "type11";
    case GhostType::None: return "none";
  }
  return "?";
}

int arithmetic_genus(const StableCurveGraph& g) {
  int sum = 0;
  for (const Component& c : g.components()) sum += c.genus;
  // first Betti number of a connected graph: |E| - |V| + 1
  return sum + int(g.nodes().size()) - g.num_components() + 1;
}

StabilityReport check_dm_stability(const StableCurveGraph& g) {
  StabilityReport r;
  for (int c = 0; c < g.num_components(); ++c) {
    bool ok = 2 * g.component(c).genus + g.special_count(c) >= 3;
    r.per_component.push_back(ok);
    r.overall = r.overall && ok;
  }
  return r;
}

StabilityReport check_gw_stability(const StableCurveGraph& g) {
  StabilityReport r = check_dm_stability(g);
  r.overall = true;
  for (int c = 0; c < g.num_components(); ++c) {
    bool ok = r.per_component[size_t(c)] || g.component(c).area > 0;
    r.per_component[size_t(c)] = ok;
    r.overall = r.overall && ok;
  }
  return r;
}

bool check_uc_stability(const StableCurveGraph& g) {
  if (!check_gw_stability(g).overall) return false;
  if (g.k() == 0) return true;
  int ck = g.marked_component(g.k());
  const Component& c = g.component(ck);
  bool destabilizing = 2 * c.genus + g.special_count(ck) == 3 && c.area == 0;
  return !destabilizing || c.ghost_constant;
}

GhostType classify_ghost(const StableCurveGraph& g) {
  if (g.k() < 1) throw GraphError("classify_ghost needs a last marked point");
  int ck = g.marked_component(g.k());
  const Component& c = g.component(ck);
  int nm = g.marked_count_on(ck);
  int nn = g.nodal_halfedges_on(ck);
  int special = nm + nn;
  if (c.area > 0 || 2 * c.genus + special >= 4) return GhostType::None;
  if (2 * c.genus + special < 3) throw GraphError("component carrying z_k is not GW-stable");
  if (c.genus == 0 && nm == 1 && nn == 2) return GhostType::Type01;
  if (c.genus == 0 && nm == 2 && nn == 1) return GhostType::Type02;
  if (c.genus == 0 && nm == 3 && nn == 0) return GhostType::Type03;
  if (c.genus == 1 && nm == 1 && nn == 0) return GhostType::Type11;
  return GhostType::None;  // e.g. genus 1 with one node: stays stable after forgetting
}

int dm_dimension(int g, int k) {
  if (2 * g + k < 3) throw GraphError("unstable signature (2g+k < 3)");
  return 6 * g - 6 + 2 * k;
}

int fredholm_index(int c1A, int g, int k, int n) {
  if (n < 1) throw GraphError("target dimension 2n needs n >= 1");
  return 2 * c1A + (2 * n - 6) * (1 - g) + 2 * k;
}

namespace {

// Component permutations that preserve decorations and marked incidence.
// Visitor receives each valid permutation.
template <class F>
void for_each_decoration_perm(const StableCurveGraph& g, F&& visit) {
  const int nc = g.num_components();
  std::vector<int> perm(size_t(nc), 0);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int c = 0; c < nc && ok; ++c)
      ok = g.component(c) == g.component(perm[size_t(c)]);
    for (size_t i = 0; i < g.marked().size() && ok; ++i)
      ok = perm[size_t(g.marked()[i])] == g.marked()[i];
    if (ok) visit(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

using PairKey = std::pair<int, int>;  // unordered component endpoints, sorted

std::map<PairKey, int> pair_classes(const StableCurveGraph& g) {
  std::map<PairKey, int> m;
  for (const NodalPair& p : g.nodes())
    m[{std::min(p.a.comp, p.b.comp), std::max(p.a.comp, p.b.comp)}]++;
  return m;
}

}  // namespace

std::uint64_t count_automorphisms(const StableCurveGraph& g) {
  if (g.num_components() > 8)
    throw GraphError("count_automorphisms: brute-force bound is 8 components");
  const auto classes = pair_classes(g);
  std::uint64_t total = 0;
  for_each_decoration_perm(g, [&](const std::vector<int>& perm) {
    // A permutation contributes iff it maps each pair class onto a class of
    // equal size; the number of induced pair bijections is the product of
    // factorials of the class sizes.
    std::uint64_t ways = 1;
    for (const auto& [key, count] : classes) {
      PairKey image{std::min(perm[size_t(key.first)], perm[size_t(key.second)]),
                    std::max(perm[size_t(key.first)], perm[size_t(key.second)])};
      auto it = classes.find(image);
      if (it == classes.end() || it->second != count) {
        ways = 0;
        break;
      }
      for (int i = 2; i <= count; ++i) ways *= std::uint64_t(i);
    }
    total += ways;
  });
  return total;
}

std::string canonical_string(const StableCurveGraph& g) {
  const int nc = g.num_components();
  if (nc > 8)
    throw GraphError("canonical_string: brute-force bound is 8 components");

  // The canonical order lists components sorted by decoration; only
  // permutations within runs of equal decorations can change the result,
  // so the search is the product of factorials of the tie-run sizes
  // rather than nc! full orderings.
  std::vector<std::string> key{size_t(nc), std::string()};
  for (int c = 0; c < nc; ++c) {
    const Component& comp = g.component(c);
    key[size_t(c)] = std::to_string(comp.genus) + "," + format_rational(comp.area) +
                     "," + std::to_string(comp.chern) + "," +
                     std::to_string(int(comp.ghost_constant));
  }
  std::vector<int> arrangement(size_t(nc), 0);
  std::iota(arrangement.begin(), arrangement.end(), 0);
  std::stable_sort(arrangement.begin(), arrangement.end(),
                   [&](int a, int b) { return key[size_t(a)] < key[size_t(b)]; });
  std::vector<std::pair<int, int>> runs;  // [start, end) of equal keys
  for (int s = 0; s < nc;) {
    int e = s + 1;
    while (e < nc && key[size_t(arrangement[size_t(e)])] == key[size_t(arrangement[size_t(s)])])
      ++e;
    if (e - s > 1) runs.emplace_back(s, e);
    s = e;
  }

  // Signature for one arrangement: marked labels' new indices followed by
  // the sorted pair list, each pair packed into one int.
  std::vector<int> perm(size_t(nc), 0);
  std::vector<int> sig, best_sig, pr;
  bool have = false;
  auto consider = [&]() {
    for (int pos = 0; pos < nc; ++pos) perm[size_t(arrangement[size_t(pos)])] = pos;
    sig.clear();
    for (int m : g.marked()) sig.push_back(perm[size_t(m)]);
    pr.clear();
    for (const NodalPair& p : g.nodes()) {
      int x = perm[size_t(p.a.comp)];
      int y = perm[size_t(p.b.comp)];
      if (x > y) std::swap(x, y);
      pr.push_back(x * 16 + y);
    }
    std::sort(pr.begin(), pr.end());
    sig.insert(sig.end(), pr.begin(), pr.end());
    if (!have || sig < best_sig) {
      best_sig = sig;
      have = true;
    }
  };
  std::function<void(size_t)> rec = [&](size_t ri) {
    if (ri == runs.size()) {
      consider();
      return;
    }
    auto [s, e] = runs[ri];
    std::sort(arrangement.begin() + s, arrangement.begin() + e);
    do {
      rec(ri + 1);
    } while (std::next_permutation(arrangement.begin() + s, arrangement.begin() + e));
  };
  rec(0);

  std::ostringstream os;
  std::stable_sort(arrangement.begin(), arrangement.end(),
                   [&](int a, int b) { return key[size_t(a)] < key[size_t(b)]; });
  for (int pos = 0; pos < nc; ++pos) os << "C" << key[size_t(arrangement[size_t(pos)])] << ";";
  size_t i = 0;
  os << "M";
  for (size_t m = 0; m < g.marked().size(); ++m) os << best_sig[i++] << ",";
  os << "N";
  for (; i < best_sig.size(); ++i) os << (best_sig[i] / 16) << "-" << (best_sig[i] % 16) << ",";
  return os.str();
}

bool isomorphic(const StableCurveGraph& g, const StableCurveGraph& h) {
  if (g.num_components() != h.num_components() || g.k() != h.k() ||
      g.nodes().size() != h.nodes().size())
    return false;
  return canonical_string(g) == canonical_string(h);
}

nlohmann::ordered_json graph_to_json(const StableCurveGraph& g) {
  nlohmann::ordered_json j;
  j["k"] = g.k();
  j["components"] = nlohmann::ordered_json::array();
  for (const Component& c : g.components())
    j["components"].push_back({{"genus", c.genus},
                               {"area", format_rational(c.area)},
                               {"chern", c.chern},
                               {"ghost_constant", c.ghost_constant}});
  nlohmann::ordered_json marked = nlohmann::ordered_json::object();
  for (int i = 1; i <= g.k(); ++i) marked[std::to_string(i)] = g.marked_component(i);
  j["marked"] = marked;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const NodalPair& p : g.nodes())
    j["nodes"].push_back({{p.a.comp, p.a.slot}, {p.b.comp, p.b.slot}});
  return j;
}

StableCurveGraph graph_from_json(const nlohmann::json& j) {
  std::vector<Component> comps;
  for (const auto& cj : j.at("components"))
    comps.push_back({cj.at("genus").get<int>(),
                     parse_rational(cj.at("area").get<std::string>()),
                     cj.at("chern").get<int>(), cj.at("ghost_constant").get<bool>()});
  int k = j.at("k").get<int>();
  std::vector<int> marked(size_t(k), 0);
  for (int i = 1; i <= k; ++i) marked[size_t(i - 1)] = j.at("marked").at(std::to_string(i)).get<int>();
  std::vector<NodalPair> nodes;
  for (const auto& nj : j.at("nodes"))
    nodes.push_back(NodalPair({nj.at(0).at(0).get<int>(), nj.at(0).at(1).get<int>()},
                              {nj.at(1).at(0).get<int>(), nj.at(1).at(1).get<int>()}));
  return StableCurveGraph(std::move(comps), std::move(marked), std::move(nodes));
}

}  // namespace gw
