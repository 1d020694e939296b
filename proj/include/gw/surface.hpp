#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gw/rational.hpp"

#include <json.hpp>

namespace gw {

// Thrown when a graph fails its structural invariants, or when an operation's
// precondition does not hold.
struct GraphError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// One irreducible component of the nodal surface: its genus, symplectic area
// label (integral of u*omega), a Chern label for index bookkeeping, and the
// "u is constant on this component" flag used by uc-stability.
struct Component {
  int genus = 0;
  Rational area = 0;
  int chern = 0;
  bool ghost_constant = false;

  bool operator==(const Component&) const = default;
};

// A half-edge: attachment point of a nodal pair. Slots are opaque ids, unique
// per component, so a pair may join a component to itself.
struct HalfEdge {
  int comp = 0;
  int slot = 0;
  auto operator<=>(const HalfEdge&) const = default;
};

// Unordered pair of distinct half-edges (a nodal pair). Stored sorted.
struct NodalPair {
  HalfEdge a, b;
  NodalPair(HalfEdge x, HalfEdge y) : a(x < y ? x : y), b(x < y ? y : x) {}
  auto operator<=>(const NodalPair&) const = default;
};

// Decorated dual graph of a nodal marked surface. Immutable once constructed;
// all invariants (distinct half-edges, connected incidence graph, nonnegative
// decorations, marked labels 1..k each placed once) are validated eagerly.
class StableCurveGraph {
 public:
  StableCurveGraph(std::vector<Component> components,
                   std::vector<int> marked,  // index i holds the component of label i+1
                   std::vector<NodalPair> nodes);

  int k() const { return int(marked_.size()); }
  int num_components() const { return int(components_.size()); }
  const std::vector<Component>& components() const { return components_; }
  const Component& component(int c) const { return components_.at(size_t(c)); }
  const std::vector<int>& marked() const { return marked_; }
  int marked_component(int label) const;  // 1-based label
  const std::vector<NodalPair>& nodes() const { return nodes_; }

  int marked_count_on(int c) const;
  int nodal_halfedges_on(int c) const;
  // 2g_C + #marked + #nodal half-edges is compared against 3 everywhere.
  int special_count(int c) const { return marked_count_on(c) + nodal_halfedges_on(c); }

  Rational total_area() const;
  int total_chern() const;

  // Smallest slot id not yet used on component c.
  int fresh_slot(int c) const;

  bool operator==(const StableCurveGraph&) const = default;

 private:
  std::vector<Component> components_;
  std::vector<int> marked_;
  std::vector<NodalPair> nodes_;
};

enum class GhostType { Type01, Type02, Type03, Type11, None };

std::string to_string(GhostType t);

struct StabilityReport {
  std::vector<bool> per_component;
  bool overall = true;
};

// Sum of component genera plus the first Betti number of the incidence graph.
int arithmetic_genus(const StableCurveGraph& g);

// 2 g_C + #special(C) >= 3 for every component.
StabilityReport check_dm_stability(const StableCurveGraph& g);

// DM-stable or positive area, componentwise.
StabilityReport check_gw_stability(const StableCurveGraph& g);

// GW-stability plus: if the component carrying z_k would be destabilized by
// forgetting z_k (exactly 3 special points, zero area), its ghost_constant
// flag must be set.
bool check_uc_stability(const StableCurveGraph& g);

// Classification of the component carrying the last marked point, by
// (genus, #marked, #nodal) when it is a zero-area component with exactly three
// special points; None when forgetting z_k keeps it GW-stable.
GhostType classify_ghost(const StableCurveGraph& g);

// 6g - 6 + 2k; requires 2g + k >= 3.
int dm_dimension(int g, int k);

// 2 c1(A) + (2n - 6)(1 - g) + 2k.
int fredholm_index(int c1A, int g, int k, int n);

// Decorated automorphisms: component permutations preserving decorations and
// marked incidence, times compatible bijections of the nodal-pair multiset.
// Brute force; rejects graphs with more than 8 components.
std::uint64_t count_automorphisms(const StableCurveGraph& g);

// Decorated-graph isomorphism (marked labels fixed, components permutable).
bool isomorphic(const StableCurveGraph& g, const StableCurveGraph& h);

// Canonical encoding invariant under component relabeling and slot renaming;
// equal strings iff isomorphic. Used for deduplication in enumeration.
std::string canonical_string(const StableCurveGraph& g);

nlohmann::ordered_json graph_to_json(const StableCurveGraph& g);
StableCurveGraph graph_from_json(const nlohmann::json& j);

}  // namespace gw
