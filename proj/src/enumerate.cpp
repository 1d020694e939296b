#include "gw/enumerate.hpp"

#include <functional>
#include <numeric>
#include <tuple>
#include <unordered_set>

namespace gw {

namespace {

// Multisets of `count` edges over the pair types (i,j), i <= j.
void edge_multisets(int npairs, int count,
                    const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick;
  std::function<void(int, int)> rec = [&](int from, int left) {
    if (left == 0) {
      fn(pick);
      return;
    }
    for (int t = from; t < npairs; ++t) {
      pick.push_back(t);
      rec(t, left - 1);
      pick.pop_back();
    }
  };
  rec(0, count);
}

bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> root(size_t(n), 0);
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (root[size_t(x)] != x) x = root[size_t(x)] = root[size_t(root[size_t(x)])];
    return x;
  };
  for (auto [a, b] : edges) root[size_t(find(a))] = find(b);
  for (int c = 1; c < n; ++c)
    if (find(c) != find(0)) return false;
  return true;
}

}  // namespace

std::vector<StableCurveGraph> enumerate_gw_universe(const UniverseConfig& cfg) {
  std::vector<StableCurveGraph> out;
  std::unordered_set<std::string> seen;

  for (int n = 1; n <= cfg.max_components; ++n) {
    // Pair types (i,j) with i <= j, self-pairs included.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) pairs.emplace_back(i, j);

    int emin = n - 1;
    int emax = cfg.max_genus + n - 1;  // b1 = E - n + 1 <= max_genus
    for (int E = emin; E <= emax; ++E) {
      edge_multisets(int(pairs.size()), E, [&](const std::vector<int>& picks) {
        std::vector<std::pair<int, int>> edges;
        for (int t : picks) edges.push_back(pairs[size_t(t)]);
        if (!connected(n, edges)) return;
        int b1 = E - n + 1;

        std::vector<int> halfedges(size_t(n), 0);
        for (auto [a, b] : edges) {
          halfedges[size_t(a)] += 1;
          halfedges[size_t(b)] += 1;
        }

        // Genus assignments with total arithmetic genus within bound.
        std::vector<int> gen(size_t(n), 0);
        std::function<void(int, int)> genus_rec = [&](int idx, int budget) {
          if (idx == n) {
            for (int mask = 0; mask < (1 << n); ++mask) {
              for (int k = 0; k <= cfg.max_k; ++k) {
                // Marked-count compositions of k over the components.
                std::vector<int> cnt(size_t(n), 0);
                std::function<void(int, int)> cnt_rec = [&](int ci, int left) {
                  if (ci == n - 1) {
                    cnt[size_t(ci)] = left;
                  } else {
                    for (int c = 0; c <= left; ++c) {
                      cnt[size_t(ci)] = c;
                      cnt_rec(ci + 1, left - c);
                    }
                    return;
                  }
                  // GW stability from the counts alone.
                  for (int c = 0; c < n; ++c) {
                    int special = cnt[size_t(c)] + halfedges[size_t(c)];
                    bool dm = 2 * gen[size_t(c)] + special >= 3;
                    if (!dm && ((mask >> c) & 1) == 0) return;
                  }
                  // Every isomorphism class has a representative whose
                  // components are sorted by (genus, area, marked count);
                  // skipping the rest avoids most duplicate candidates.
                  for (int c = 0; c + 1 < n; ++c) {
                    auto lkey = [&](int i) {
                      return std::tuple(gen[size_t(i)], (mask >> i) & 1, cnt[size_t(i)]);
                    };
                    if (lkey(c) > lkey(c + 1)) return;
                  }
                  // Expand the count vector into label assignments.
                  std::vector<int> marked(size_t(k), 0);
                  std::vector<int> left_cnt = cnt;
                  std::function<void(int)> label_rec = [&](int lab) {
                    if (lab == k) {
                      std::vector<Component> comps;
                      std::vector<int> slot(size_t(n), 0);
                      for (int c = 0; c < n; ++c) {
                        Component comp;
                        comp.genus = gen[size_t(c)];
                        comp.area = Rational(((mask >> c) & 1));
                        comp.chern = 0;
                        int special = cnt[size_t(c)] + halfedges[size_t(c)];
                        comp.ghost_constant =
                            comp.area == 0 && 2 * comp.genus + special == 3;
                        comps.push_back(comp);
                      }
                      std::vector<NodalPair> nodes;
                      for (auto [a, b] : edges) {
                        HalfEdge ha{a, slot[size_t(a)]++};
                        HalfEdge hb{b, slot[size_t(b)]++};
                        nodes.push_back(NodalPair(ha, hb));
                      }
                      StableCurveGraph g(std::move(comps), marked, std::move(nodes));
                      if (seen.insert(canonical_string(g)).second)
                        out.push_back(std::move(g));
                      return;
                    }
                    for (int c = 0; c < n; ++c) {
                      if (left_cnt[size_t(c)] == 0) continue;
                      --left_cnt[size_t(c)];
                      marked[size_t(lab)] = c;
                      label_rec(lab + 1);
                      ++left_cnt[size_t(c)];
                    }
                  };
                  label_rec(0);
                };
                cnt_rec(0, k);
              }
            }
            return;
          }
          for (int g = 0; g <= budget; ++g) {
            gen[size_t(idx)] = g;
            genus_rec(idx + 1, budget - g);
          }
        };
        genus_rec(0, cfg.max_genus - b1);
      });
    }
  }
  return out;
}

}  // namespace gw
