#pragma once

#include <map>
#include <vector>

#include "gw/rational.hpp"

namespace gw {

// Counts N_d of degree-d rational plane curves through 3d-1 generic points,
// via the recursion
//   N_1 = 1,
//   N_d = sum_{d1+d2=d} N_{d1} N_{d2} (d1^2 d2^2 C(3d-4,3d1-2)
//                                      - d1^3 d2 C(3d-4,3d1-1)).
// d_max <= 12 (exact big-integer binomials).
std::map<long, Rational> kontsevich(long d_max);

// Independent re-derivation: instantiate the splitting axiom on the
// four-pointed genus-zero boundary relation applied to
// GW_{d,0,3d}(H,H,pt,...,pt; boundary classes) and solve for N_d as the
// affine-linear unknown. d_max <= 6 (the subset sum is 2^{3d-4} terms).
std::map<long, Rational> kontsevich_via_splitting(long d_max);

}  // namespace gw
