#pragma once

#include <vector>

#include "gw/surface.hpp"

namespace gw {

struct UniverseConfig {
  int max_components = 4;
  int max_genus = 2;  // arithmetic genus bound
  int max_k = 5;
  // areas range over {0, 1}; chern labels are 0; ghost flags are set exactly
  // on the area-zero components with three special points, so every graph
  // whose last point sits on a destabilizing ghost is uc-stable.
};

// All connected GW-stable decorated graphs within the bounds, up to decorated
// isomorphism (one canonical representative each).
std::vector<StableCurveGraph> enumerate_gw_universe(const UniverseConfig& cfg);

}  // namespace gw
