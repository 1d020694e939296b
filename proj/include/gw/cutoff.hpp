#pragma once

#include <vector>

namespace gw {

// Smooth cutoff beta(s) = (integral_s^1 phi) / (integral_{-1}^1 phi) with the
// standard even bump phi(t) = exp(-1/(1-t^2)) on (-1,1). beta = 1 below -1,
// 0 above 1, strictly decreasing between, and beta(s) + beta(-s) = 1 exactly:
// negative arguments are evaluated as 1 - beta(-s).
class CutoffFunction {
 public:
  CutoffFunction();
  double operator()(double s) const;

 private:
  double tail(double s) const;  // integral_s^1 phi for s in [0,1]
  double half_integral_;        // integral_0^1 phi
  std::vector<double> gl_nodes_, gl_weights_;  // Gauss-Legendre on [-1,1]
};

CutoffFunction make_cutoff();

// The plateau cutoff of the continuity counterexample: 1 on [-1/2,1/2],
// 0 outside [-1,1], smooth transition via the same bump integral.
double plateau_cutoff(const CutoffFunction& beta, double s);

}  // namespace gw
