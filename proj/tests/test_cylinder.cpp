#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gw/cylinder.hpp"
#include "gw/rng.hpp"

using namespace gw;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr int kNs = 65;  // odd: the middle circle s = R/2 is a grid row
constexpr int kNt = 32;

// Band-limited field (harmonics <= 3, well under Nyquist 16) so rotations by
// trigonometric interpolation are exact.
CylinderField random_field(Rng& rng, double s0, double ds, int dim,
                           const std::vector<double>& c) {
  const int kmax = 3;
  std::vector<double> amp, omg, phs, tph;
  for (int i = 0; i < dim * (kmax + 1); ++i) {
    amp.push_back(rng.uniform(-1.0, 1.0));
    omg.push_back(rng.uniform(0.02, 0.15));
    phs.push_back(rng.uniform(0.0, kTwoPi));
    tph.push_back(rng.uniform(0.0, kTwoPi));
  }
  return CylinderField::sample(
      s0, ds, kNs, kNt, dim,
      [=](double s, double t) {
        std::vector<double> v(size_t(dim), 0.0);
        for (int d = 0; d < dim; ++d) {
          double sum = c[size_t(d)];
          for (int k = 0; k <= kmax; ++k) {
            size_t m = size_t(d * (kmax + 1) + k);
            sum += amp[m] * std::sin(omg[m] * s + phs[m]) *
                   std::cos(kTwoPi * k * t + tph[m]);
          }
          v[size_t(d)] = sum;
        }
        return v;
      },
      c);
}

double max_diff(const CylinderField& a, const CylinderField& b) {
  REQUIRE(a.samples.size() == b.samples.size());
  double m = 0;
  for (size_t i = 0; i < a.samples.size(); ++i)
    m = std::max(m, std::fabs(a.samples[i] - b.samples[i]));
  return m;
}

double max_abs(const CylinderField& a) {
  double m = 0;
  for (double x : a.samples) m = std::max(m, std::fabs(x));
  return m;
}

}  // namespace

TEST_CASE("sampling and evaluation: on-grid values are exact, off-grid uses the constant") {
  auto f = CylinderField::sample(
      0.0, 0.5, 5, 8, 1, [](double s, double t) { return std::vector<double>{s + t}; },
      {7.0});
  CHECK(f.eval(1.0, 2)[0] == 1.25);           // grid row, t = 2/8
  CHECK(f.eval(0.75, 0)[0] == doctest::Approx(0.75));  // linear in s
  CHECK(f.eval(5.0, 3)[0] == 7.0);            // beyond the range
  CHECK(f.eval(-1.0, 0)[0] == 7.0);
  CHECK(f.smax() == 2.0);
  CHECK_THROWS_AS(CylinderField::sample(0, 1, 1, 8, 1, nullptr, {0.0}), CylinderError);
}

TEST_CASE("rotations: index shifts are exact and interpolation inverts") {
  Rng rng(42);
  CylinderField f = random_field(rng, 0.0, 0.25, 2, {0.0, 0.0});
  // Integer shift by 5 grid steps.
  CylinderField g = shift_t(f, 5.0 / kNt);
  for (int j = 0; j < kNt; ++j)
    CHECK(g.at(3, j, 0) == f.at(3, (j - 5 + kNt) % kNt, 0));
  // Generic rotation, then its inverse.
  double theta = 0.1234567;
  CylinderField h = shift_t(shift_t(f, theta), -theta);
  CHECK(max_diff(h, f) < 1e-12);
  // A pure harmonic rotates to its closed form.
  auto wave = CylinderField::sample(
      0.0, 1.0, kNs, kNt, 1,
      [](double, double t) { return std::vector<double>{std::cos(kTwoPi * 3 * t)}; },
      {0.0});
  CylinderField rw = shift_t(wave, theta);
  for (int j = 0; j < kNt; ++j)
    CHECK(rw.at(0, j, 0) ==
          doctest::Approx(std::cos(kTwoPi * 3 * (double(j) / kNt - theta))).epsilon(1e-12));
}

TEST_CASE("weighted norm matches the closed-form exponential oracle") {
  // f(s) = c + e^{-d's} v on [0, S]: norm^2 = |c|^2 +
  // |v|^2 (1 + d'^2 + d'^4) (1 - e^{-2(d'-d)S}) / (2(d'-d)).
  const double dp = 1.0, del = 0.5, S = 6.0;
  const std::vector<double> v = {1.0, 2.0}, c = {0.5, -0.25};
  const int ns = 2401;
  auto f = CylinderField::sample(
      0.0, S / (ns - 1), ns, 8, 2,
      [&](double s, double) {
        return std::vector<double>{c[0] + v[0] * std::exp(-dp * s),
                                   c[1] + v[1] * std::exp(-dp * s)};
      },
      c);
  WeightedNormSpec spec;
  spec.delta = {del};
  double v2 = v[0] * v[0] + v[1] * v[1];
  double c2 = c[0] * c[0] + c[1] * c[1];
  double expect = c2 + v2 * (1 + dp * dp + dp * dp * dp * dp) *
                           (1 - std::exp(-2 * (dp - del) * S)) / (2 * (dp - del));
  CHECK(weighted_norm_sq(f, spec) == doctest::Approx(expect).epsilon(1e-4));

  // Homogeneity at c = 0.
  auto g = CylinderField::sample(
      0.0, S / (ns - 1), ns, 8, 1,
      [&](double s, double) { return std::vector<double>{std::exp(-dp * s)}; }, {0.0});
  CylinderField g3 = g;
  for (double& x : g3.samples) x *= 3.0;
  CHECK(weighted_norm(g3, spec) == doctest::Approx(3.0 * weighted_norm(g, spec)).epsilon(1e-12));

  // A constant field scores exactly |c|^2.
  auto k = CylinderField::sample(
      0.0, 0.1, 11, 8, 2, [&](double, double) { return c; }, c);
  CHECK(weighted_norm_sq(k, spec) == doctest::Approx(c2).epsilon(1e-14));
}

TEST_CASE("weighted norm validates its exponential weight sequence") {
  auto f = CylinderField::sample(
      0.0, 0.1, 11, 8, 1, [](double, double) { return std::vector<double>{1.0}; },
      {0.0});
  WeightedNormSpec bad;
  bad.delta = {7.0};
  CHECK_THROWS_AS(weighted_norm_sq(f, bad), CylinderError);
  bad.delta = {0.5, 0.4};
  CHECK_THROWS_AS(weighted_norm_sq(f, bad), CylinderError);
  bad.delta = {};
  CHECK_THROWS_AS(weighted_norm_sq(f, bad), CylinderError);
}

TEST_CASE("gluing with a vanishing parameter returns the pieces untouched") {
  Rng rng(7);
  double R = 100.0, ds = R / (kNs - 1);
  std::vector<double> c = {0.3, -0.1};
  CylinderField hp = random_field(rng, 0.0, ds, 2, c);
  CylinderField hm = random_field(rng, -R, ds, 2, c);
  GluedResult r0 = glue(hp, hm, GluingParameter::zero(), GluingProfile::exp_profile());
  CHECK(r0.parts.size() == 2);
  GluedResult uc0 = glue_uc(hp, hm, GluingParameter::zero(), GluingParameter::zero());
  REQUIRE(uc0.parts.size() == 3);
  for (double x : uc0.parts[1].samples) CHECK((x == 0.3 || x == -0.1));
  GluedResult uc1 =
      glue_uc(hp, hm, GluingParameter::from_polar(0.25, 0.1), GluingParameter::zero());
  CHECK(uc1.parts.size() == 2);
}

TEST_CASE("two-parameter gluing equals one-parameter gluing of the composition") {
  Rng rng(2024);
  GluingProfile exp = GluingProfile::exp_profile();
  for (int trial = 0; trial < 5; ++trial) {
    GluingParameter a =
        GluingParameter::from_polar(rng.uniform(0.22, 0.45), rng.next_double());
    GluingParameter b =
        GluingParameter::from_polar(rng.uniform(0.22, 0.45), rng.next_double());
    double R = gluing_length(a, exp).value() + gluing_length(b, exp).value();
    double ds = R / (kNs - 1);
    std::vector<double> c = {0.2, 0.4};
    CylinderField hp = random_field(rng, 0.0, ds, 2, c);
    CylinderField hm = random_field(rng, -R, ds, 2, c);
    GluedResult uc = glue_uc(hp, hm, a, b);
    GluedResult one = glue(hp, hm, compose(a, b, exp), exp);
    REQUIRE(uc.parts.size() == 1);
    REQUIRE(one.parts.size() == 1);
    CHECK(max_diff(uc.parts[0], one.parts[0]) <= 1e-9);
  }
}

TEST_CASE("retraction: same glued map, zero anti-gluing, idempotent") {
  Rng rng(555);
  GluingProfile exp = GluingProfile::exp_profile();
  for (int trial = 0; trial < 5; ++trial) {
    GluingParameter a =
        GluingParameter::from_polar(rng.uniform(0.22, 0.45), rng.next_double());
    GluingParameter b =
        GluingParameter::from_polar(rng.uniform(0.22, 0.45), rng.next_double());
    double R = gluing_length(a, exp).value() + gluing_length(b, exp).value();
    double ds = R / (kNs - 1);
    std::vector<double> c = {0.1, -0.2};
    CylinderField xp = random_field(rng, 0.0, ds, 2, c);
    CylinderField xm = random_field(rng, -R, ds, 2, c);

    auto [ep, em] = retract(xp, xm, a, b);

    GluedResult gx = glue_uc(xp, xm, a, b);
    GluedResult ge = glue_uc(ep, em, a, b);
    CHECK(max_diff(gx.parts[0], ge.parts[0]) <= 1e-9);

    AntiglueResult anti = antiglue_uc(ep, em, a, b);
    REQUIRE(!anti.empty);
    CHECK(max_abs(anti.field) <= 1e-9);

    auto [ep2, em2] = retract(ep, em, a, b);
    CHECK(max_diff(ep2, ep) <= 1e-9);
    CHECK(max_diff(em2, em) <= 1e-9);
  }
}

TEST_CASE("anti-gluing: averages and the middle-circle value") {
  Rng rng(99);
  GluingProfile exp = GluingProfile::exp_profile();
  GluingParameter a = GluingParameter::from_polar(0.25, 0.0);
  GluingParameter b = GluingParameter::from_polar(0.25, 0.0);
  double R = 2 * gluing_length(a, exp).value();
  double ds = R / (kNs - 1);
  std::vector<double> c = {0.0};
  CylinderField ep = random_field(rng, 0.0, ds, 1, c);
  CylinderField em = random_field(rng, -R, ds, 1, c);
  AntiglueResult anti = antiglue_uc(ep, em, a, b);
  REQUIRE(!anti.empty);
  // With theta = 0 the middle row is -(1/2)(eta+ - av) + (1/2)(eta- - av)
  // evaluated at s = R/2 resp. s = -R/2.
  int mid = (kNs - 1) / 2;
  for (int j = 0; j < kNt; ++j) {
    double expect = 0.5 * (em.at(mid, j, 0) - ep.at(mid, j, 0));
    CHECK(anti.field.at(mid, j, 0) == doctest::Approx(expect).epsilon(1e-12));
  }
  CHECK(antiglue_uc(ep, em, GluingParameter::zero(), b).empty);
  // Degenerate parameters: retraction is the identity.
  auto [rp, rm] = retract(ep, em, GluingParameter::zero(), b);
  CHECK(max_diff(rp, ep) == 0.0);
  CHECK(max_diff(rm, em) == 0.0);
}

TEST_CASE("gluing is not norm-continuous at the degenerate parameter") {
  std::vector<CounterexampleRow> rows = continuity_counterexample(12, 0.45, {1.0, 0.5});
  REQUIRE(rows.size() == 12);
  for (size_t i = 0; i < rows.size(); ++i) {
    const CounterexampleRow& r = rows[i];
    CHECK(r.n == int(i) + 1);
    CHECK(r.log_r_an < 0);                // gluing parameter inside the disk
    CHECK(r.target_norm * r.target_norm > 2.0);  // glued image stays large
    if (i > 0) {
      CHECK(r.source_norm < rows[i - 1].source_norm);  // source tends to zero
      CHECK(r.log_r_an <= rows[i - 1].log_r_an + 1e-12);
    }
  }
  CHECK(rows.back().source_norm * rows.back().source_norm ==
        doctest::Approx(std::exp(2 * rows.back().log_r_an) + 1.0 / 12).epsilon(1e-12));
  CHECK_THROWS_AS(continuity_counterexample(0, 0.45, {1.0}), CylinderError);
  CHECK_THROWS_AS(continuity_counterexample(5, 7.0, {1.0}), CylinderError);
  CHECK_THROWS_AS(continuity_counterexample(5, 0.45, {0.0}), CylinderError);
}

TEST_CASE("mismatched grids and asymptotics are rejected") {
  auto f = CylinderField::sample(
      0.0, 0.1, 11, 8, 1, [](double, double) { return std::vector<double>{1.0}; },
      {1.0});
  auto g = CylinderField::sample(
      0.0, 0.1, 11, 16, 1, [](double, double) { return std::vector<double>{1.0}; },
      {1.0});
  auto h = CylinderField::sample(
      0.0, 0.1, 11, 8, 1, [](double, double) { return std::vector<double>{1.0}; },
      {2.0});
  GluingParameter a = GluingParameter::from_polar(0.25, 0.0);
  CHECK_THROWS_AS(glue(f, g, a, GluingProfile::exp_profile()), CylinderError);
  CHECK_THROWS_AS(glue_uc(f, h, a, a), CylinderError);
}
