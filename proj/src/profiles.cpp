#include "gw/profiles.hpp"

namespace gw {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
const double kE = std::exp(1.0);

double wrap01(double t) {
  double w = t - std::floor(t);
  return (w == 1.0) ? 0.0 : w;
}

double logaddexp(double x, double y) {
  if (x == -std::numeric_limits<double>::infinity()) return y;
  if (y == -std::numeric_limits<double>::infinity()) return x;
  double hi = std::max(x, y), lo = std::min(x, y);
  return hi + std::log1p(std::exp(lo - hi));
}
}  // namespace

GluingProfile GluingProfile::log_profile() {
  return GluingProfile(
      ProfileKind::Log, [](double r) { return -std::log(r) / kTwoPi; },
      [](double R) { return std::exp(-kTwoPi * R); });
}

GluingProfile GluingProfile::exp_profile() {
  return GluingProfile(
      ProfileKind::Exp, [](double r) { return std::exp(1.0 / r) - kE; },
      [](double R) { return 1.0 / std::log(R + kE); });
}

GluingProfile GluingProfile::custom(std::function<double(double)> forward,
                                    std::function<double(double)> inverse) {
  return GluingProfile(ProfileKind::Custom, std::move(forward), std::move(inverse));
}

double GluingProfile::forward(double r) const {
  if (!(r > 0.0 && r <= 1.0)) throw ProfileError("profile forward: r outside (0,1]");
  return fwd_(r);
}

double GluingProfile::inverse(double R) const {
  if (!(R >= 0.0)) throw ProfileError("profile inverse: R must be nonnegative");
  return inv_(R);
}

double GluingProfile::logR_from_logr(double logr) const {
  switch (kind_) {
    case ProfileKind::Log:
      // R = -logr / 2pi
      if (!(logr < 0.0)) throw ProfileError("log profile: need r < 1");
      return std::log(-logr / kTwoPi);
    case ProfileKind::Exp: {
      // R = e^x - e with x = 1/r = e^{-logr}; for large x, log R = x + log1p(-e^{1-x}).
      double x = std::exp(-logr);
      if (x > 30.0) return x + std::log1p(-std::exp(1.0 - x));
      double R = std::exp(x) - kE;
      if (!(R > 0.0)) throw ProfileError("exp profile: need r < 1");
      return std::log(R);
    }
    case ProfileKind::Custom:
      return std::log(fwd_(std::exp(logr)));
  }
  throw ProfileError("unreachable");
}

double GluingProfile::logr_from_logR(double logR) const {
  switch (kind_) {
    case ProfileKind::Log:
      // r = e^{-2 pi R}
      return -kTwoPi * std::exp(logR);
    case ProfileKind::Exp: {
      // r = 1 / log(R + e); log(R+e) ~ logR for huge R.
      double u;
      if (logR > 700.0)
        u = logR;
      else
        u = std::log(std::exp(logR) + kE);
      return -std::log(u);
    }
    case ProfileKind::Custom:
      return std::log(inv_(std::exp(logR)));
  }
  throw ProfileError("unreachable");
}

GluingParameter GluingParameter::from_polar(double r, double theta) {
  if (r < 0.0) throw ProfileError("negative modulus");
  if (r == 0.0) return zero();
  GluingParameter a;
  a.zero_ = false;
  a.log_r_ = std::log(r);
  a.theta_ = wrap01(theta);
  return a;
}

GluingParameter GluingParameter::from_log_polar(double log_r, double theta) {
  if (log_r == -std::numeric_limits<double>::infinity()) return zero();
  GluingParameter a;
  a.zero_ = false;
  a.log_r_ = log_r;
  a.theta_ = wrap01(theta);
  return a;
}

GluingParameter GluingParameter::from_complex(std::complex<double> v) {
  if (v == std::complex<double>(0.0, 0.0)) return zero();
  // v = r e^{-2 pi i theta}  =>  theta = -arg(v)/2pi
  return from_polar(std::abs(v), -std::arg(v) / kTwoPi);
}

std::complex<double> GluingParameter::value() const {
  if (zero_) return {0.0, 0.0};
  double r = std::exp(log_r_);
  return {r * std::cos(kTwoPi * theta_), -r * std::sin(kTwoPi * theta_)};
}

bool in_half_disk(const GluingParameter& a) {
  return a.is_zero() || a.log_r() < std::log(0.5);
}

NeckLength gluing_length(const GluingParameter& a, const GluingProfile& p) {
  if (!in_half_disk(a)) throw ProfileError("gluing parameter outside half-disk");
  if (a.is_zero()) return {true, 0.0};
  return {false, p.logR_from_logr(a.log_r())};
}

GluingParameter compose(const GluingParameter& a, const GluingParameter& b,
                        const GluingProfile& p) {
  if (!in_half_disk(a) || !in_half_disk(b))
    throw ProfileError("gluing parameter outside half-disk");
  if (a.is_zero() || b.is_zero()) return GluingParameter::zero();
  double theta = a.theta() + b.theta();
  if (theta >= 1.0) theta -= 1.0;  // exact for representable inputs
  if (p.kind() == ProfileKind::Log) {
    // R is linear in log r, so R-additivity is exactly log r additivity:
    // a *_log b is literal complex multiplication.
    return GluingParameter::from_log_polar(a.log_r() + b.log_r(), theta);
  }
  double logR = logaddexp(p.logR_from_logr(a.log_r()), p.logR_from_logr(b.log_r()));
  return GluingParameter::from_log_polar(p.logr_from_logR(logR), theta);
}

GluingParameter transition(const GluingParameter& a, const GluingProfile& from,
                           const GluingProfile& to) {
  if (a.is_zero()) return GluingParameter::zero();
  if (from.kind() == to.kind() && from.kind() != ProfileKind::Custom) return a;
  return GluingParameter::from_log_polar(to.logr_from_logR(from.logR_from_logr(a.log_r())),
                                         a.theta());
}

}  // namespace gw
