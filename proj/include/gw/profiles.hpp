#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <stdexcept>

namespace gw {

struct ProfileError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class ProfileKind { Log, Exp, Custom };

// A gluing profile: diffeomorphism phi: (0,1] -> [0,inf) taking the modulus of
// a gluing parameter to the neck length R. All internal arithmetic is offered
// in log-space as well, since Exp-profile transitions produce moduli like
// e^{-2 pi (e^4 - e)} that underflow double.
class GluingProfile {
 public:
  static GluingProfile log_profile();
  static GluingProfile exp_profile();
  static GluingProfile custom(std::function<double(double)> forward,
                              std::function<double(double)> inverse);

  ProfileKind kind() const { return kind_; }

  double forward(double r) const;  // R = phi(r)
  double inverse(double R) const;  // r = phi^{-1}(R)

  // log R as a function of log r, and back. Stable for extreme magnitudes.
  double logR_from_logr(double logr) const;
  double logr_from_logR(double logR) const;

 private:
  GluingProfile(ProfileKind k, std::function<double(double)> f,
                std::function<double(double)> i)
      : kind_(k), fwd_(std::move(f)), inv_(std::move(i)) {}
  ProfileKind kind_;
  std::function<double(double)> fwd_, inv_;
};

// a = r e^{-2 pi i theta}, stored as (log r, theta); a = 0 is a distinct state
// with theta canonicalized to 0.
class GluingParameter {
 public:
  static GluingParameter zero() { return GluingParameter(); }
  static GluingParameter from_polar(double r, double theta);
  static GluingParameter from_log_polar(double log_r, double theta);
  static GluingParameter from_complex(std::complex<double> v);

  bool is_zero() const { return zero_; }
  double log_r() const { return log_r_; }
  double r() const { return zero_ ? 0.0 : std::exp(log_r_); }
  double theta() const { return theta_; }
  std::complex<double> value() const;

 private:
  GluingParameter() = default;
  bool zero_ = true;
  double log_r_ = -std::numeric_limits<double>::infinity();
  double theta_ = 0.0;
};

// Neck length R_a = phi(r_a); infinite when a = 0. Carried in log scale.
struct NeckLength {
  bool infinite = false;
  double log_R = -std::numeric_limits<double>::infinity();

  double value() const {
    return infinite ? std::numeric_limits<double>::infinity() : std::exp(log_R);
  }
};

bool in_half_disk(const GluingParameter& a);  // |a| < 1/2

NeckLength gluing_length(const GluingParameter& a, const GluingProfile& p);

// a *_phi b = phi^{-1}(phi(r_a) + phi(r_b)) e^{-2 pi i (theta_a + theta_b)},
// zero if either input is zero.
GluingParameter compose(const GluingParameter& a, const GluingParameter& b,
                        const GluingProfile& p);

// Modulus transforms by to^{-1} o from; argument unchanged; 0 -> 0.
// No clamping: the image may leave the half-disk (callers may report it).
GluingParameter transition(const GluingParameter& a, const GluingProfile& from,
                           const GluingProfile& to);

}  // namespace gw
