#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gw/cutoff.hpp"
#include "gw/numcheck.hpp"
#include "gw/profiles.hpp"
#include "gw/rng.hpp"

using namespace gw;

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

TEST_CASE("profile values at reference points") {
  GluingProfile lg = GluingProfile::log_profile();
  GluingProfile ex = GluingProfile::exp_profile();
  CHECK(lg.forward(1.0) == doctest::Approx(0.0));
  CHECK(lg.forward(0.25) == doctest::Approx(std::log(4.0) / kTwoPi).epsilon(1e-14));
  // phi_exp(1/4) = e^4 - e.
  CHECK(ex.forward(0.25) == doctest::Approx(51.8798682047).epsilon(1e-10));
  CHECK(ex.forward(1.0) == doctest::Approx(0.0));
  // Round trips.
  for (double r : {0.45, 0.3, 0.1, 0.02}) {
    CHECK(lg.inverse(lg.forward(r)) == doctest::Approx(r).epsilon(1e-12));
    CHECK(ex.inverse(ex.forward(r)) == doctest::Approx(r).epsilon(1e-12));
  }
}

TEST_CASE("log-scale conversions agree with direct evaluation and survive extremes") {
  GluingProfile ex = GluingProfile::exp_profile();
  GluingProfile lg = GluingProfile::log_profile();
  for (double r : {0.45, 0.25, 0.1, 0.05}) {
    CHECK(ex.logR_from_logr(std::log(r)) ==
          doctest::Approx(std::log(ex.forward(r))).epsilon(1e-12));
    CHECK(lg.logR_from_logr(std::log(r)) ==
          doctest::Approx(std::log(lg.forward(r))).epsilon(1e-12));
  }
  // Underflow regime: logr = -2 pi (e^4 - e) would give r ~ 1e-142.
  double logr = -kTwoPi * (std::exp(4.0) - std::exp(1.0));
  double logR = ex.logR_from_logr(logr);
  CHECK(std::isfinite(logR));
  CHECK(ex.logr_from_logR(logR) == doctest::Approx(logr).epsilon(1e-10));
  // Extreme neck length round trip.
  CHECK(ex.logr_from_logR(800.0) == doctest::Approx(-std::log(800.0)).epsilon(1e-9));
}

TEST_CASE("gluing parameters store polar data exactly") {
  GluingParameter a = GluingParameter::from_polar(0.25, 0.125);
  CHECK(!a.is_zero());
  CHECK(a.r() == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(a.theta() == doctest::Approx(0.125).epsilon(1e-15));
  std::complex<double> v = a.value();
  CHECK(std::abs(v - std::polar(0.25, -kTwoPi * 0.125)) < 1e-15);
  GluingParameter b = GluingParameter::from_complex(v);
  CHECK(b.r() == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(in_half_disk(a));
  CHECK_FALSE(in_half_disk(GluingParameter::from_polar(0.6, 0.0)));
  CHECK(GluingParameter::zero().is_zero());
}

TEST_CASE("log-profile composition is complex multiplication") {
  GluingProfile lg = GluingProfile::log_profile();
  Rng rng(12345);
  for (int i = 0; i < 500; ++i) {
    GluingParameter a = GluingParameter::from_polar(rng.uniform(1e-3, 0.499),
                                                    rng.next_double());
    GluingParameter b = GluingParameter::from_polar(rng.uniform(1e-3, 0.499),
                                                    rng.next_double());
    GluingParameter c = compose(a, b, lg);
    CHECK(std::abs(c.value() - a.value() * b.value()) <= 1e-12);
  }
}

TEST_CASE("neck lengths add under composition for both profiles") {
  Rng rng(777);
  for (GluingProfile p : {GluingProfile::log_profile(), GluingProfile::exp_profile()}) {
    for (int i = 0; i < 200; ++i) {
      GluingParameter a = GluingParameter::from_polar(rng.uniform(0.01, 0.499),
                                                      rng.next_double());
      GluingParameter b = GluingParameter::from_polar(rng.uniform(0.01, 0.499),
                                                      rng.next_double());
      double Rab = gluing_length(compose(a, b, p), p).value();
      double sum = gluing_length(a, p).value() + gluing_length(b, p).value();
      CHECK(std::fabs(Rab - sum) <= 1e-10 * std::max(1.0, std::fabs(sum)));
    }
  }
  CHECK(gluing_length(GluingParameter::zero(), GluingProfile::log_profile()).infinite);
}

TEST_CASE("composition with zero is zero; theta adds mod 1") {
  GluingProfile ex = GluingProfile::exp_profile();
  GluingParameter a = GluingParameter::from_polar(0.25, 0.75);
  CHECK(compose(a, GluingParameter::zero(), ex).is_zero());
  GluingParameter c = compose(a, GluingParameter::from_polar(0.25, 0.75), ex);
  CHECK(c.theta() == doctest::Approx(0.5).epsilon(1e-15));
  // Frozen modulus: 1/ln(2 e^4 - e).
  CHECK(c.r() == doctest::Approx(0.2142273268).epsilon(1e-9));
}

TEST_CASE("transitions between profiles act on the modulus only") {
  GluingProfile lg = GluingProfile::log_profile();
  GluingProfile ex = GluingProfile::exp_profile();
  GluingParameter a = GluingParameter::from_polar(0.25, 0.3);
  GluingParameter t = transition(a, ex, lg);
  // log r' = -2 pi (e^4 - e).
  CHECK(t.log_r() == doctest::Approx(-kTwoPi * (std::exp(4) - std::exp(1))).epsilon(1e-12));
  CHECK(t.theta() == doctest::Approx(0.3));
  // Same-profile transition is the identity.
  GluingParameter id = transition(a, ex, ex);
  CHECK(id.log_r() == doctest::Approx(a.log_r()).epsilon(1e-15));
  // Round trip through the other profile.
  GluingParameter back = transition(t, lg, ex);
  CHECK(back.log_r() == doctest::Approx(a.log_r()).epsilon(1e-10));
  // Log -> Exp can leave the half-disk: phi_log(0.45) is tiny, r' = phi_exp^{-1} large.
  GluingParameter out = transition(GluingParameter::from_polar(0.45, 0.0), lg, ex);
  CHECK(out.r() > 0.5);
}

TEST_CASE("cutoff function: exact symmetry, endpoints, monotonicity") {
  CutoffFunction beta;
  CHECK(beta(0.0) == 0.5);
  CHECK(beta(-1.0) == 1.0);
  CHECK(beta(1.0) == 0.0);
  CHECK(beta(-5.0) == 1.0);
  for (double s : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    CHECK(beta(s) + beta(-s) == 1.0);  // exact by construction
    CHECK(beta(s) < beta(s - 0.05));
  }
  // Plateau cutoff.
  CHECK(plateau_cutoff(beta, 0.0) == 1.0);
  CHECK(plateau_cutoff(beta, 0.5) == 1.0);
  CHECK(plateau_cutoff(beta, -0.5) == 1.0);
  CHECK(plateau_cutoff(beta, 1.0) == 0.0);
  CHECK(plateau_cutoff(beta, 0.75) == doctest::Approx(0.5));
  CHECK(plateau_cutoff(beta, 0.75) == plateau_cutoff(beta, -0.75));
}

TEST_CASE("smoothness battery classifies the four named maps") {
  std::vector<SmoothnessReport> reps = builtin_profile_reports(1e-4);
  REQUIRE(reps.size() == 4);
  auto find = [&](const std::string& name) -> const SmoothnessReport& {
    for (const auto& r : reps)
      if (r.map == name) return r;
    REQUIRE(false);
    return reps[0];
  };
  const SmoothnessReport& e2l = find("exp_to_log");
  CHECK(e2l.continuous);
  CHECK(e2l.c1);
  // Jacobian norm decays toward zero through the sampled radii.
  REQUIRE(e2l.jac_norms.size() >= 4);
  for (size_t i = 1; i < e2l.jac_norms.size(); ++i)
    CHECK(e2l.jac_norms[i].log_norm < e2l.jac_norms[i - 1].log_norm);
  const SmoothnessReport& l2e = find("log_to_exp");
  CHECK(l2e.continuous);
  CHECK_FALSE(l2e.c1);
  const SmoothnessReport& ce = find("compose_exp");
  CHECK(ce.continuous);
  CHECK_FALSE(ce.c1);
  const SmoothnessReport& cl = find("compose_log");
  CHECK(cl.continuous);
  CHECK(cl.c1);
}

TEST_CASE("log-to-exp difference quotient blows past 1e3") {
  GluingProfile lg = GluingProfile::log_profile();
  GluingProfile ex = GluingProfile::exp_profile();
  double x = 1e-4;
  double fx = ex.inverse(lg.forward(x));
  CHECK(fx / x > 1e3);
  CHECK(fx / x == doctest::Approx(1.0 / (x * std::log(-std::log(x) / kTwoPi + std::exp(1.0)))));
}

TEST_CASE("exp-profile composition directional limits match the closed form") {
  GluingProfile ex = GluingProfile::exp_profile();
  MapUnderTest m = compose_map(ex, "compose_exp");
  for (double t1 : {0.0, 0.15}) {
    double t2 = 0.4, r1 = 0.6, r2 = 0.8;  // r1^2 + r2^2 = 1
    RealVec v = {r1 * std::cos(kTwoPi * t1), r1 * std::sin(kTwoPi * t1),
                 r2 * std::cos(kTwoPi * t2), r2 * std::sin(kTwoPi * t2)};
    std::vector<double> hs;
    for (int j = 0; j <= 8; ++j) hs.push_back(1e-2 * std::pow(2.0, -j));
    DirectionalLimit lim = directional_derivative_limit(m, v, hs, 1e-3);
    RealVec expect = compose_directional_closed_form(r1, kTwoPi * t1, r2, kTwoPi * t2);
    REQUIRE(lim.estimate.size() == expect.size());
    for (size_t i = 0; i < expect.size(); ++i)
      CHECK(lim.estimate[i] == doctest::Approx(expect[i]).epsilon(2e-3));
  }
}
