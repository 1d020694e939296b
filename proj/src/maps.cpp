#include "gw/maps.hpp"

#include <algorithm>
#include <cassert>

namespace gw {

namespace {

// Rebuilds a graph with component `dead` removed; indices above it shift down.
struct Rebuilder {
  std::vector<Component> comps;
  std::vector<int> marked;
  std::vector<NodalPair> nodes;
  int dead;

  explicit Rebuilder(const StableCurveGraph& g, int dead_) : dead(dead_) {
    for (int c = 0; c < g.num_components(); ++c)
      if (c != dead) comps.push_back(g.component(c));
    marked = g.marked();
  }

  int remap(int c) const {
    assert(c != dead);
    return c < dead ? c : c - 1;
  }

  HalfEdge remap(HalfEdge h) const { return {remap(h.comp), h.slot}; }
};

bool trivially_empty(const Rational& A, int g, int k) {
  if (A != 0) return false;
  return (g == 0 && k <= 2) || (g == 1 && k == 0);
}

}  // namespace

std::string to_string(FtCase c) {
  switch (c) {
    case FtCase::Case1: return "1";
    case FtCase::Case2a: return "2a";
    case FtCase::Case2b: return "2b";
  }
  return "?";
}

ForgetResult forget_point(const StableCurveGraph& g) {
  if (g.k() < 1) throw GraphError("forget_point: no marked point to forget");
  if (!check_uc_stability(g))
    throw GraphError("forget_point: uc-stability fails, no natural forgetting map");

  ForgetResult out;
  out.ghost = classify_ghost(g);

  // Target signature (A, g, k-1); the trivially-empty GW sets are a result,
  // not an error. A = 0 is identified with all areas vanishing.
  if (trivially_empty(g.total_area(), arithmetic_genus(g), g.k() - 1)) {
    out.empty_target = true;
    return out;
  }

  const int ck = g.marked_component(g.k());
  switch (out.ghost) {
    case GhostType::None:
    case GhostType::Type03:
    case GhostType::Type11: {
      // Type03/Type11 reach here only when the target is nonempty (positive
      // total area elsewhere is impossible for them, so in practice they were
      // caught above); dropping the label is the correct generic action.
      out.ftcase = FtCase::Case1;
      std::vector<int> marked = g.marked();
      marked.pop_back();
      out.graph = StableCurveGraph(g.components(), std::move(marked), g.nodes());
      return out;
    }
    case GhostType::Type01: {
      out.ftcase = FtCase::Case2a;
      // The two pairs adjacent to the ghost; their far endpoints survive.
      std::vector<HalfEdge> partners;
      Rebuilder rb(g, ck);
      rb.nodes.clear();
      for (const NodalPair& p : g.nodes()) {
        bool ia = p.a.comp == ck, ib = p.b.comp == ck;
        if (!ia && !ib) {
          rb.nodes.push_back(NodalPair(rb.remap(p.a), rb.remap(p.b)));
        } else {
          // A self-pair on the ghost would make it the whole surface, which
          // is the trivially-empty (0,1,0) target handled above.
          assert(ia != ib);
          partners.push_back(rb.remap(ia ? p.b : p.a));
        }
      }
      assert(partners.size() == 2);
      rb.nodes.push_back(NodalPair(partners[0], partners[1]));
      rb.marked.pop_back();
      for (int& m : rb.marked) m = rb.remap(m);
      out.graph = StableCurveGraph(std::move(rb.comps), std::move(rb.marked),
                                   std::move(rb.nodes));
      return out;
    }
    case GhostType::Type02: {
      out.ftcase = FtCase::Case2b;
      Rebuilder rb(g, ck);
      rb.nodes.clear();
      int partner = -1;
      for (const NodalPair& p : g.nodes()) {
        bool ia = p.a.comp == ck, ib = p.b.comp == ck;
        if (!ia && !ib)
          rb.nodes.push_back(NodalPair(rb.remap(p.a), rb.remap(p.b)));
        else
          partner = rb.remap(ia ? p.b : p.a).comp;
      }
      assert(partner >= 0);
      rb.marked.pop_back();
      for (int& m : rb.marked)
        m = (m == ck) ? partner : rb.remap(m);  // moves z_i to the partner
      out.graph = StableCurveGraph(std::move(rb.comps), std::move(rb.marked),
                                   std::move(rb.nodes));
      return out;
    }
  }
  throw GraphError("unreachable");
}

StableCurveGraph canonical_section(const StableCurveGraph& g, int i) {
  if (i < 1 || i > g.k()) throw GraphError("canonical_section: label out of range");
  const int ci = g.marked_component(i);
  const int sphere = g.num_components();

  std::vector<Component> comps = g.components();
  comps.push_back(Component{0, Rational(0), 0, /*ghost_constant=*/true});

  std::vector<int> marked = g.marked();
  marked[size_t(i - 1)] = sphere;  // z_i moves to the new sphere
  marked.push_back(sphere);        // z_k lives there too

  std::vector<NodalPair> nodes = g.nodes();
  nodes.push_back(NodalPair({ci, g.fresh_slot(ci)}, {sphere, 0}));
  return StableCurveGraph(std::move(comps), std::move(marked), std::move(nodes));
}

StableCurveGraph permute(const StableCurveGraph& g, const std::vector<int>& sigma) {
  const int k = g.k();
  if (int(sigma.size()) != k) throw GraphError("permute: wrong permutation size");
  std::vector<bool> hit(size_t(k), false);
  for (int s : sigma) {
    if (s < 1 || s > k || hit[size_t(s - 1)]) throw GraphError("permute: not a bijection");
    hit[size_t(s - 1)] = true;
  }
  std::vector<int> marked(size_t(k), 0);
  for (int i = 1; i <= k; ++i)
    marked[size_t(i - 1)] = g.marked_component(sigma[size_t(i - 1)]);
  return StableCurveGraph(g.components(), std::move(marked), g.nodes());
}

StableCurveGraph split_identify(const StableCurveGraph& g0, const StableCurveGraph& g1) {
  const int k0 = g0.k() - 1, k1 = g1.k() - 1;
  if (k0 < 0 || k1 < 0) throw GraphError("split_identify: factors need marked points");
  if (k0 + arithmetic_genus(g0) < 2 || k1 + arithmetic_genus(g1) < 2)
    throw GraphError("split_identify: splitting inequalities violated");

  const int off = g0.num_components();
  std::vector<Component> comps = g0.components();
  comps.insert(comps.end(), g1.components().begin(), g1.components().end());

  std::vector<int> marked;
  for (int i = 1; i <= k0; ++i) marked.push_back(g0.marked_component(i));
  for (int i = 2; i <= k1 + 1; ++i) marked.push_back(g1.marked_component(i) + off);

  std::vector<NodalPair> nodes = g0.nodes();
  for (const NodalPair& p : g1.nodes())
    nodes.push_back(NodalPair({p.a.comp + off, p.a.slot}, {p.b.comp + off, p.b.slot}));

  const int c0 = g0.marked_component(k0 + 1);
  const int c1 = g1.marked_component(1) + off;
  // Fresh slots in the combined node list (the joined graph cannot be
  // constructed yet: without the new node the two factors are disconnected).
  auto fresh = [&](int c) {
    int s = 0;
    for (const NodalPair& p : nodes) {
      if (p.a.comp == c) s = std::max(s, p.a.slot + 1);
      if (p.b.comp == c) s = std::max(s, p.b.slot + 1);
    }
    return s;
  };
  int s0 = fresh(c0);
  int s1 = fresh(c1);
  if (c0 == c1) s1 = s0 + 1;
  nodes.push_back(NodalPair({c0, s0}, {c1, s1}));
  return StableCurveGraph(std::move(comps), std::move(marked), std::move(nodes));
}

StableCurveGraph genus_reduce_identify(const StableCurveGraph& g) {
  if (g.k() < 2) throw GraphError("genus_reduce_identify: needs two marked points");
  const int ca = g.marked_component(g.k() - 1);
  const int cb = g.marked_component(g.k());
  std::vector<int> marked = g.marked();
  marked.pop_back();
  marked.pop_back();
  std::vector<NodalPair> nodes = g.nodes();
  int sa = g.fresh_slot(ca);
  int sb = (ca == cb) ? sa + 1 : g.fresh_slot(cb);
  nodes.push_back(NodalPair({ca, sa}, {cb, sb}));
  return StableCurveGraph(g.components(), std::move(marked), std::move(nodes));
}

StableCurveGraph stabilize_project(const StableCurveGraph& g) {
  if (2 * arithmetic_genus(g) + g.k() < 3)
    throw GraphError("stabilize_project: no stable model (2g+k < 3)");

  // Forget the map data first.
  std::vector<Component> comps;
  for (const Component& c : g.components()) comps.push_back({c.genus, 0, 0, false});
  StableCurveGraph cur(std::move(comps), g.marked(), g.nodes());

  for (;;) {
    int bad = -1;
    for (int c = 0; c < cur.num_components(); ++c)
      if (2 * cur.component(c).genus + cur.special_count(c) < 3) {
        bad = c;
        break;
      }
    if (bad < 0) return cur;

    const int nm = cur.marked_count_on(bad);
    const int nn = cur.nodal_halfedges_on(bad);
    assert(cur.component(bad).genus == 0);
    assert(nn >= 1 && nn <= 2);  // isolated unstable spheres contradict 2g+k >= 3

    Rebuilder rb(cur, bad);
    rb.nodes.clear();
    std::vector<HalfEdge> partners;
    for (const NodalPair& p : cur.nodes()) {
      bool ia = p.a.comp == bad, ib = p.b.comp == bad;
      if (!ia && !ib) {
        rb.nodes.push_back(NodalPair(rb.remap(p.a), rb.remap(p.b)));
      } else {
        assert(ia != ib);  // a lone self-pair sphere is excluded by 2g+k >= 3
        partners.push_back(rb.remap(ia ? p.b : p.a));
      }
    }
    if (nn == 2) {
      assert(nm == 0 && partners.size() == 2);
      rb.nodes.push_back(NodalPair(partners[0], partners[1]));
    }
    std::vector<int> marked;
    for (int m : cur.marked()) {
      if (m == bad) {
        assert(nm == 1);  // rule 3: the marked point moves to the partner
        marked.push_back(partners[0].comp);
      } else {
        marked.push_back(rb.remap(m));
      }
    }
    cur = StableCurveGraph(std::move(rb.comps), std::move(marked), std::move(rb.nodes));
  }
}

LocalCoordinate ftk_local_expression(const LocalCoordinate& coords, FtCase ftcase,
                                     const GluingProfile& profile) {
  LocalCoordinate out = coords;
  switch (ftcase) {
    case FtCase::Case1:
      if (!out.point) throw GraphError("ftk case 1: missing point parameter y");
      out.point.reset();
      return out;
    case FtCase::Case2a: {
      if (out.gluing.size() < 2) throw GraphError("ftk case 2a: needs two gluing entries");
      GluingParameter c = compose(out.gluing[0], out.gluing[1], profile);
      out.gluing.erase(out.gluing.begin());
      out.gluing[0] = c;
      return out;
    }
    case FtCase::Case2b:
      if (out.gluing.empty()) throw GraphError("ftk case 2b: needs a gluing entry");
      out.gluing.erase(out.gluing.begin());
      return out;
  }
  throw GraphError("unreachable");
}

}  // namespace gw
