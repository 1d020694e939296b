#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "gw/logreal.hpp"
#include "gw/profiles.hpp"

namespace gw {

using RealVec = std::vector<double>;
using LogVec = std::vector<LogReal>;

// A finite-dimensional coordinate map under numerical test. eval_log is an
// optional log-scale evaluator for maps whose values underflow double (the
// Exp->Log transition); when absent it wraps eval.
struct MapUnderTest {
  std::string name;
  int dim_in = 0;
  int dim_out = 0;
  std::function<RealVec(const RealVec&)> eval;
  std::function<LogVec(const RealVec&)> eval_log;  // may be null

  LogVec eval_log_or_wrap(const RealVec& x) const;
};

// Central-difference Jacobian, entries (f_i(x+h e_j) - f_i(x-h e_j)) / 2h.
std::vector<RealVec> fd_jacobian(const MapUnderTest& f, const RealVec& x, double h);

// Same stencil evaluated in signed-log arithmetic.
std::vector<LogVec> fd_jacobian_log(const MapUnderTest& f, const RealVec& x, double h);

// Frobenius norm of a log-scale matrix, returned as log(norm).
double log_frobenius(const std::vector<LogVec>& m);

struct DirectionalLimit {
  std::vector<RealVec> quotients;  // F(h v)/h per step
  RealVec estimate;                // Richardson-extrapolated limit
  bool converged = false;
};

// One-sided difference quotients F(h v)/h along a unit direction with a
// Richardson-style (first-order) limit estimate.
DirectionalLimit directional_derivative_limit(const MapUnderTest& f, const RealVec& v,
                                              const std::vector<double>& hs,
                                              double tol);

struct JacNormSample {
  double radius = 0;
  double log_norm = 0;  // log of the Frobenius norm (meaningful under underflow)
  double norm = 0;      // exp(log_norm); may flush to 0
};

struct DirectionEvidence {
  RealVec v;
  RealVec limit;       // directional quotient limit estimate
  RealVec jacobian_v;  // J(0) v from the two-scale Jacobian
  double mismatch = 0;
  bool converged = false;
};

struct SmoothnessReport {
  std::string map;
  std::string region;
  bool continuous = false;
  bool c1 = false;
  double max_jump = 0;            // |F(r_min v) - F(0)| maximized over directions
  double jac_two_scale_diff = 0;  // ||J_h - J_{h/4}|| at the base point
  std::vector<JacNormSample> jac_norms;
  std::vector<DirectionEvidence> directions;
};

struct SmoothnessConfig {
  double region_radius = 0.3;
  double tol_c1 = 1e-4;
  double fd_h = 1e-3;
  std::vector<double> jac_radii;      // sample |x| values for Jacobian-norm decay
  std::vector<RealVec> directions;    // unit directions; defaults chosen per dim
};

// Verdict protocol: continuity = |F(r v)| non-increasing (log scale) along every
// sampled ray with all values finite; C1 = two-scale Jacobian agreement at 0
// AND the Jacobian reproducing every directional quotient limit within tol_c1.
SmoothnessReport smoothness_report(const MapUnderTest& f, const SmoothnessConfig& cfg);

// The named coordinate maps of the profile analysis.
MapUnderTest transition_map(const GluingProfile& from, const GluingProfile& to,
                            std::string name);
MapUnderTest compose_map(const GluingProfile& p, std::string name);

// Smoothness batch over the four named maps (exp->log, log->exp, compose-exp,
// compose-log) with the standard configuration.
std::vector<SmoothnessReport> builtin_profile_reports(double tol_c1);

// Closed form min{r1,r2}(cos(t1+t2), sin(t1+t2)) for a direction
// (r1 cos t1, r1 sin t1, r2 cos t2, r2 sin t2).
RealVec compose_directional_closed_form(double r1, double t1, double r2, double t2);

}  // namespace gw
