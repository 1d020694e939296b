#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "gw/profiles.hpp"
#include "gw/surface.hpp"

namespace gw {

// Local chart data near a boundary stratum: one gluing parameter per nodal
// pair, an opaque deformation vector v, and the optional extra point parameter
// y of the alternative family near a ghost component.
struct LocalCoordinate {
  std::vector<GluingParameter> gluing;
  std::vector<double> deformation;
  std::optional<std::complex<double>> point;
};

enum class FtCase { Case1, Case2a, Case2b };

std::string to_string(FtCase c);

// Result of forgetting the last marked point. The trivially-empty target
// signatures are a distinct value, not an error.
struct ForgetResult {
  bool empty_target = false;
  std::optional<StableCurveGraph> graph;
  GhostType ghost = GhostType::None;
  FtCase ftcase = FtCase::Case1;
};

// ft_k at dual-graph level. Case dispatch is computed from classify_ghost:
// None -> drop the label; Type01 -> delete the ghost and both adjacent pairs,
// join the surviving partners; Type02 -> delete the ghost and its pair, move
// the other marked label to the partner. Throws GraphError when uc-stability
// fails (no natural forgetting map).
ForgetResult forget_point(const StableCurveGraph& g);

// s_i: adds a ghost sphere carrying labels i and k (k = old k + 1), joined to
// the former location of z_i. forget_point o canonical_section = identity (up
// to isomorphism: the re-attachment slot is fresh).
StableCurveGraph canonical_section(const StableCurveGraph& g, int i);

// Relabeling z'_i := z_{sigma(i)}; sigma is 1-based, sigma[i-1] = sigma(i).
StableCurveGraph permute(const StableCurveGraph& g, const std::vector<int>& sigma);

// phi_S at graph level: joins the last marked point of g0 to the first of g1.
// Requires the splitting inequalities k_i + g_i >= 2.
StableCurveGraph split_identify(const StableCurveGraph& g0, const StableCurveGraph& g1);

// psi at graph level: identifies the last two marked points as a nodal pair;
// raises arithmetic genus by exactly one.
StableCurveGraph genus_reduce_identify(const StableCurveGraph& g);

// Projection to the Deligne-Mumford stabilization: forgets the map data
// (areas, Chern labels, ghost flags) and contracts unstable spheres until
// every component is DM-stable. Order-independent and idempotent.
StableCurveGraph stabilize_project(const StableCurveGraph& g);

// Local expressions of ft_k: case 1 (a,v,y) -> (a,v); case 2a replaces the
// first two gluing entries by their profile composition a *_phi b;
// case 2b (a,v) -> v drops the first gluing entry.
LocalCoordinate ftk_local_expression(const LocalCoordinate& coords, FtCase ftcase,
                                     const GluingProfile& profile);

}  // namespace gw
