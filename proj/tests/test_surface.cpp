#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gw/surface.hpp"

using namespace gw;

namespace {

Component comp(int genus, long area, bool ghost = false) {
  Component c;
  c.genus = genus;
  c.area = Rational(area);
  c.ghost_constant = ghost;
  return c;
}

// Sphere with k marked points and the given area.
StableCurveGraph one_sphere(int k, long area) {
  return StableCurveGraph({comp(0, area)}, std::vector<int>(size_t(k), 0), {});
}

StableCurveGraph two_spheres_double_edge() {
  return StableCurveGraph({comp(0, 1), comp(0, 1)}, {},
                          {NodalPair({0, 0}, {1, 0}), NodalPair({0, 1}, {1, 1})});
}

}  // namespace

TEST_CASE("arithmetic genus = vertex genera + first Betti number") {
  CHECK(arithmetic_genus(one_sphere(3, 1)) == 0);
  CHECK(arithmetic_genus(StableCurveGraph({comp(1, 0)}, {0}, {})) == 1);
  // Two spheres joined twice: b1 = 2 - 2 + 1 = 1.
  CHECK(arithmetic_genus(two_spheres_double_edge()) == 1);
  // Self-pair on a single sphere: b1 = 1 - 1 + 1 = 1.
  StableCurveGraph loop({comp(0, 1)}, {0}, {NodalPair({0, 0}, {0, 1})});
  CHECK(arithmetic_genus(loop) == 1);
}

TEST_CASE("graph validation rejects malformed input") {
  CHECK_THROWS_AS(StableCurveGraph({}, {}, {}), GraphError);
  CHECK_THROWS_AS(StableCurveGraph({comp(-1, 0)}, {}, {}), GraphError);
  CHECK_THROWS_AS(StableCurveGraph({comp(0, 0)}, {1}, {}), GraphError);  // bad comp
  // Shared half-edge.
  CHECK_THROWS_AS(StableCurveGraph({comp(0, 0), comp(0, 0)}, {},
                                   {NodalPair({0, 0}, {1, 0}), NodalPair({0, 0}, {1, 1})}),
                  GraphError);
  // Disconnected.
  CHECK_THROWS_AS(StableCurveGraph({comp(0, 1), comp(0, 1)}, {}, {}), GraphError);
  // Degenerate pair.
  CHECK_THROWS_AS(StableCurveGraph({comp(0, 1)}, {}, {NodalPair({0, 0}, {0, 0})}),
                  GraphError);
}

TEST_CASE("stability notions") {
  // Sphere, three marked points, area zero: DM-stable.
  CHECK(check_dm_stability(one_sphere(3, 0)).overall);
  // Sphere with one marked point: not DM, saved by positive area.
  CHECK_FALSE(check_dm_stability(one_sphere(1, 1)).overall);
  CHECK(check_gw_stability(one_sphere(1, 1)).overall);
  CHECK_FALSE(check_gw_stability(one_sphere(1, 0)).overall);
  // Torus with no special point: positive area required.
  CHECK(check_gw_stability(StableCurveGraph({comp(1, 1)}, {}, {})).overall);
  CHECK_FALSE(check_gw_stability(StableCurveGraph({comp(1, 0)}, {}, {})).overall);
}

TEST_CASE("uc-stability needs the ghost flag exactly on destabilizing ghosts") {
  // z_3 on a zero-area sphere with 3 special points.
  StableCurveGraph ghost = one_sphere(3, 0);
  CHECK_FALSE(check_uc_stability(ghost));
  StableCurveGraph flagged({comp(0, 0, true)}, {0, 0, 0}, {});
  CHECK(check_uc_stability(flagged));
  // Positive area: no flag needed.
  CHECK(check_uc_stability(one_sphere(3, 1)));
  // k = 0: nothing to forget.
  CHECK(check_uc_stability(StableCurveGraph({comp(1, 1)}, {}, {})));
}

TEST_CASE("ghost classification of the component carrying z_k") {
  // (0,3): lone sphere with three marked points, zero area.
  CHECK(classify_ghost(one_sphere(3, 0)) == GhostType::Type03);
  // (1,1): zero-area torus with one marked point.
  CHECK(classify_ghost(StableCurveGraph({comp(1, 0)}, {0}, {})) == GhostType::Type11);
  // (0,2): ghost with z_k, one more label, one node to a stable side.
  StableCurveGraph t02({comp(1, 0), comp(0, 0)}, {1, 1},
                       {NodalPair({0, 0}, {1, 0})});
  CHECK(classify_ghost(t02) == GhostType::Type02);
  // (0,1): ghost with z_k between two stable components.
  StableCurveGraph t01({comp(1, 0), comp(0, 0), comp(1, 0)}, {1},
                       {NodalPair({0, 0}, {1, 0}), NodalPair({1, 1}, {2, 0})});
  CHECK(classify_ghost(t01) == GhostType::Type01);
  // Positive area: never a destabilizing ghost.
  CHECK(classify_ghost(one_sphere(3, 1)) == GhostType::None);
  // Four special points: stays stable.
  CHECK(classify_ghost(one_sphere(4, 0)) == GhostType::None);
}

TEST_CASE("moduli dimension and Fredholm index") {
  CHECK(dm_dimension(0, 3) == 0);
  CHECK(dm_dimension(0, 4) == 2);
  CHECK(dm_dimension(1, 1) == 2);
  CHECK_THROWS_AS(dm_dimension(0, 2), GraphError);
  // Degree-d plane curves with three marked points: index 6d + 4.
  for (int d = 0; d <= 4; ++d) CHECK(fredholm_index(3 * d, 0, 3, 2) == 6 * d + 4);
}

TEST_CASE("automorphism counts on symmetric shapes") {
  // Two identical spheres joined by two nodes: swap components x swap pairs.
  CHECK(count_automorphisms(two_spheres_double_edge()) == 4);
  // Triple edge: 2 x 3!.
  StableCurveGraph triple({comp(0, 1), comp(0, 1)}, {},
                          {NodalPair({0, 0}, {1, 0}), NodalPair({0, 1}, {1, 1}),
                           NodalPair({0, 2}, {1, 2})});
  CHECK(count_automorphisms(triple) == 12);
  // Distinct decorations kill the swap.
  StableCurveGraph asym({comp(0, 1), comp(0, 2)}, {},
                        {NodalPair({0, 0}, {1, 0}), NodalPair({0, 1}, {1, 1})});
  CHECK(count_automorphisms(asym) == 2);
  // A marked point pins its component.
  StableCurveGraph pinned({comp(0, 1), comp(0, 1)}, {0},
                          {NodalPair({0, 1}, {1, 0}), NodalPair({0, 2}, {1, 1})});
  CHECK(count_automorphisms(pinned) == 2);
}

TEST_CASE("isomorphism is component-relabeling invariance") {
  StableCurveGraph g({comp(0, 1), comp(1, 0)}, {0, 1}, {NodalPair({0, 0}, {1, 0})});
  StableCurveGraph h({comp(1, 0), comp(0, 1)}, {1, 0}, {NodalPair({1, 0}, {0, 0})});
  CHECK(isomorphic(g, h));
  CHECK(canonical_string(g) == canonical_string(h));
  StableCurveGraph other({comp(0, 1), comp(1, 1)}, {0, 1}, {NodalPair({0, 0}, {1, 0})});
  CHECK_FALSE(isomorphic(g, other));
}

TEST_CASE("JSON round trip is the identity") {
  StableCurveGraph g({comp(0, 1), comp(1, 0, true)}, {0, 1, 1},
                     {NodalPair({0, 0}, {1, 0}), NodalPair({0, 1}, {0, 2})});
  StableCurveGraph back = graph_from_json(graph_to_json(g));
  CHECK(back == g);
  CHECK(graph_to_json(back).dump() == graph_to_json(g).dump());
}

TEST_CASE("rational areas survive serialization") {
  StableCurveGraph g({comp(0, 0)}, {0, 0, 0}, {});
  Component c = comp(0, 0);
  c.area = Rational(7, 3);
  StableCurveGraph h({c}, {0}, {});
  CHECK(graph_from_json(graph_to_json(h)) == h);
  CHECK(format_rational(graph_from_json(graph_to_json(h)).component(0).area) == "7/3");
}
