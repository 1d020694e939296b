#include "gw/cutoff.hpp"

#include <cmath>

namespace gw {

namespace {

double bump(double t) {
  double u = 1.0 - t * t;
  if (u <= 0.0) return 0.0;
  return std::exp(-1.0 / u);
}

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(size_t(n), 0.0);
  w.assign(size_t(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::fabs(dt) < 1e-16) break;
    }
    x[size_t(i)] = t;
    double p0 = 1.0, p1 = t;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (t * p1 - p0) / (t * t - 1.0);
    w[size_t(i)] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

}  // namespace

CutoffFunction::CutoffFunction() {
  gauss_legendre(48, gl_nodes_, gl_weights_);
  half_integral_ = tail(0.0);
}

double CutoffFunction::tail(double s) const {
  // integral over [s, 1]
  double a = s, b = 1.0;
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double sum = 0.0;
  for (size_t i = 0; i < gl_nodes_.size(); ++i)
    sum += gl_weights_[i] * bump(mid + half * gl_nodes_[i]);
  return sum * half;
}

double CutoffFunction::operator()(double s) const {
  if (s <= -1.0) return 1.0;
  if (s >= 1.0) return 0.0;
  if (s < 0.0) return 1.0 - (*this)(-s);
  return tail(s) / (2.0 * half_integral_);
}

CutoffFunction make_cutoff() { return CutoffFunction(); }

double plateau_cutoff(const CutoffFunction& beta, double s) {
  double a = std::fabs(s);
  if (a <= 0.5) return 1.0;
  if (a >= 1.0) return 0.0;
  return beta(4.0 * a - 3.0);
}

}  // namespace gw
