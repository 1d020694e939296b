#pragma once

#include <cmath>
#include <limits>

namespace gw {

// Signed log-scale real: value = sign * exp(log_mag). Survives magnitudes like
// e^{-2*pi*(e^{1/r}-e)} that underflow double immediately. Only the handful of
// operations the finite-difference kernels need.
struct LogReal {
  double log_mag = -std::numeric_limits<double>::infinity();  // log|value|
  int sign = 0;                                               // -1, 0, +1

  LogReal() = default;
  LogReal(double log_mag_, int sign_) : log_mag(log_mag_), sign(sign_) {
    // An underflowed magnitude is an exact zero for our purposes.
    if (log_mag == -std::numeric_limits<double>::infinity()) sign = 0;
    if (sign == 0) log_mag = -std::numeric_limits<double>::infinity();
  }

  static LogReal zero() { return LogReal(); }

  static LogReal from_double(double x) {
    if (x == 0.0) return LogReal();
    return LogReal(std::log(std::fabs(x)), x > 0 ? 1 : -1);
  }

  double to_double() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(log_mag);
  }

  bool is_zero() const { return sign == 0; }

  LogReal operator-() const { return LogReal(log_mag, -sign); }

  friend LogReal operator*(const LogReal& a, const LogReal& b) {
    if (a.sign == 0 || b.sign == 0) return LogReal();
    return LogReal(a.log_mag + b.log_mag, a.sign * b.sign);
  }

  friend LogReal operator/(const LogReal& a, const LogReal& b) {
    return LogReal(a.log_mag - b.log_mag, a.sign * b.sign);
  }

  friend LogReal operator+(const LogReal& a, const LogReal& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    const LogReal& hi = (a.log_mag >= b.log_mag) ? a : b;
    const LogReal& lo = (a.log_mag >= b.log_mag) ? b : a;
    double d = lo.log_mag - hi.log_mag;  // <= 0
    if (hi.sign == lo.sign) return LogReal(hi.log_mag + std::log1p(std::exp(d)), hi.sign);
    double t = -std::expm1(d);  // 1 - e^d in (0,1]; 0 means exact cancellation
    if (t == 0.0) return LogReal();
    return LogReal(hi.log_mag + std::log(t), hi.sign);
  }

  friend LogReal operator-(const LogReal& a, const LogReal& b) { return a + (-b); }

  LogReal abs() const { return LogReal(log_mag, sign == 0 ? 0 : 1); }

  // |a| < |b| in magnitude
  static bool mag_less(const LogReal& a, const LogReal& b) {
    if (b.sign == 0) return false;
    if (a.sign == 0) return true;
    return a.log_mag < b.log_mag;
  }
};

}  // namespace gw
