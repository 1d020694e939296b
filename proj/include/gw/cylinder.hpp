#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "gw/cutoff.hpp"
#include "gw/profiles.hpp"

namespace gw {

struct CylinderError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Discretized map on a cylinder piece: uniform s-grid (ns rows starting at s0,
// spacing ds), nt periodic t-samples (t_j = j/nt on S^1 = R/Z), values in
// R^dim, plus the asymptotic constant used to extend beyond the stored rows.
struct CylinderField {
  double s0 = 0;
  double ds = 0;
  int ns = 0;
  int nt = 0;
  int dim = 0;
  std::vector<double> samples;     // [is][it][d]
  std::vector<double> asymptotic;  // size dim

  double& at(int is, int it, int d) {
    return samples[size_t((is * nt + it) * dim + d)];
  }
  double at(int is, int it, int d) const {
    return samples[size_t((is * nt + it) * dim + d)];
  }
  double smax() const { return s0 + ds * (ns - 1); }

  // Samples fn(s, t) on the grid.
  static CylinderField sample(double s0, double ds, int ns, int nt, int dim,
                              const std::function<std::vector<double>(double, double)>& fn,
                              std::vector<double> asymptotic);

  // Value at (s, t_j): linear interpolation in s, asymptotic constant beyond
  // the stored range.
  std::vector<double> eval(double s, int it) const;
};

// Rigid rotation in t by theta (trigonometric interpolation; exact index
// rotation when theta * nt is integral).
CylinderField shift_t(const CylinderField& f, double theta);

// Gluing results carry 1 (glued), 2 (untouched pair) or 3 (pair plus middle
// constant) fields depending on which parameters vanish.
struct GluedResult {
  std::vector<CylinderField> parts;
};

// beta(s - R_a/2) h+ (s,t) + (1 - beta(s - R_a/2)) h-(s - R_a, t - theta_a)
// on [0, R_a] x S^1; a = 0 returns the pair unchanged.
GluedResult glue(const CylinderField& hplus, const CylinderField& hminus,
                 const GluingParameter& a, const GluingProfile& p);

// Universal-curve gluing with total neck (R_a + R_b, theta_a + theta_b) under
// the exp profile; one zero parameter -> untouched pair, both zero -> triple
// with the constant middle map. Identically glue(compose(a,b,exp)).
GluedResult glue_uc(const CylinderField& hplus, const CylinderField& hminus,
                    const GluingParameter& a, const GluingParameter& b);

struct AntiglueResult {
  bool empty = false;  // C_{a,b} is empty when a or b vanishes
  CylinderField field;
  std::vector<double> average;
};

// Anti-glued section -(1-b_ab)(eta+ - av) + b_ab (eta-(s-R,t-theta) - av) with
// av the mean of the two middle circles; b_ab(s) = beta(s - R_ab/2).
AntiglueResult antiglue_uc(const CylinderField& etaplus, const CylinderField& etaminus,
                           const GluingParameter& a, const GluingParameter& b);

// The explicit retraction onto the anti-gluing kernel: unique (eta+, eta-)
// with glue_uc(eta) = glue_uc(xi) and antiglue_uc(eta) = 0. Degenerate
// parameters act as the identity.
std::pair<CylinderField, CylinderField> retract(const CylinderField& xiplus,
                                                const CylinderField& ximinus,
                                                const GluingParameter& a,
                                                const GluingParameter& b);

struct WeightedNormSpec {
  int m = 0;
  std::vector<double> delta = {0.5};  // strictly increasing, inside (0, 2pi)
  int max_order = 2;                  // derivative orders summed (<= 2)
};

// Squared norm |c|^2 + sum_{|alpha| <= max_order} integral
// |D^alpha (f - c)|^2 e^{2 delta_m |s|} ds dt (finite differences + trapezoid).
double weighted_norm_sq(const CylinderField& f, const WeightedNormSpec& spec);

// sqrt of the above: absolutely homogeneous of degree 1 when c = 0.
double weighted_norm(const CylinderField& f, const WeightedNormSpec& spec);

struct CounterexampleRow {
  int n = 0;
  double log_r_an = 0;
  double source_norm = 0;
  double target_norm = 0;
};

// The gluing-map continuity counterexample: plateau bump gamma scaled to unit
// weighted norm, xi_n = gamma/sqrt(n), neck length R_n = ln(4n/|v|^2)/(2 delta0)
// (clamped below to keep r_an inside the half-disk). Source norms decrease to
// 0 while every target norm exceeds 1.
std::vector<CounterexampleRow> continuity_counterexample(int n_max, double delta0,
                                                         std::vector<double> v);

}  // namespace gw
