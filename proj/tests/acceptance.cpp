// Acceptance gate: ten quantitative criteria, one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "gw/correlator.hpp"
#include "gw/cylinder.hpp"
#include "gw/enumerate.hpp"
#include "gw/kontsevich.hpp"
#include "gw/maps.hpp"
#include "gw/numcheck.hpp"
#include "gw/rng.hpp"

using namespace gw;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

int failures = 0;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void report(int idx, const std::string& name, bool pass, double secs,
            const std::string& note) {
  if (!pass) ++failures;
  std::printf("[%2d/10] %s  %-42s (%.2fs)%s%s\n", idx, pass ? "PASS" : "FAIL",
              name.c_str(), secs, note.empty() ? "" : "  ", note.c_str());
  std::fflush(stdout);
}

StableCurveGraph reversed_components(const StableCurveGraph& g) {
  const int n = g.num_components();
  auto rm = [n](int c) { return n - 1 - c; };
  std::vector<Component> comps;
  for (int c = n - 1; c >= 0; --c) comps.push_back(g.component(c));
  std::vector<int> marked;
  for (int m : g.marked()) marked.push_back(rm(m));
  std::vector<NodalPair> nodes;
  for (const NodalPair& p : g.nodes())
    nodes.push_back(NodalPair({rm(p.a.comp), p.a.slot}, {rm(p.b.comp), p.b.slot}));
  return StableCurveGraph(std::move(comps), std::move(marked), std::move(nodes));
}

CylinderField band_limited_field(Rng& rng, double s0, double ds, int ns, int nt,
                                 int dim, const std::vector<double>& c) {
  const int kmax = 3;
  std::vector<double> amp, omg, phs, tph;
  for (int i = 0; i < dim * (kmax + 1); ++i) {
    amp.push_back(rng.uniform(-1.0, 1.0));
    omg.push_back(rng.uniform(0.02, 0.15));
    phs.push_back(rng.uniform(0.0, kTwoPi));
    tph.push_back(rng.uniform(0.0, kTwoPi));
  }
  return CylinderField::sample(
      s0, ds, ns, nt, dim,
      [&](double s, double t) {
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

double max_field_diff(const CylinderField& a, const CylinderField& b) {
  double m = 0;
  for (size_t i = 0; i < a.samples.size(); ++i)
    m = std::max(m, std::fabs(a.samples[i] - b.samples[i]));
  return m;
}

void criterion_1_2() {
  GluingProfile lg = GluingProfile::log_profile();
  GluingProfile ex = GluingProfile::exp_profile();
  Rng rng(20260825);
  std::vector<GluingParameter> as, bs;
  for (int i = 0; i < 100; ++i) {
    as.push_back(GluingParameter::from_polar(rng.uniform(1e-3, 0.499), rng.next_double()));
    bs.push_back(GluingParameter::from_polar(rng.uniform(1e-3, 0.499), rng.next_double()));
  }
  {
    Timer t;
    double worst = 0;
    for (const GluingParameter& a : as)
      for (const GluingParameter& b : bs) {
        GluingParameter c = compose(a, b, lg);
        worst = std::max(worst, std::abs(c.value() - a.value() * b.value()));
      }
    double secs = t.seconds();
    report(1, "log-profile composition = multiplication", worst <= 1e-12 && secs < 1.0,
           secs, "max |a*b - ab| = " + std::to_string(worst));
  }
  {
    Timer t;
    double worst = 0;
    for (const GluingProfile& p : {lg, ex})
      for (const GluingParameter& a : as)
        for (const GluingParameter& b : bs) {
          double Rab = gluing_length(compose(a, b, p), p).value();
          double sum = gluing_length(a, p).value() + gluing_length(b, p).value();
          worst = std::max(worst, std::fabs(Rab - sum) / std::max(1.0, std::fabs(sum)));
        }
    double secs = t.seconds();
    report(2, "neck-length additivity, both profiles", worst <= 1e-10, secs,
           "max rel err = " + std::to_string(worst));
  }
}

void criterion_3() {
  Timer t;
  std::vector<SmoothnessReport> reps = builtin_profile_reports(1e-4);
  bool ok = reps.size() == 4;
  std::string note;
  auto find = [&](const std::string& n) -> const SmoothnessReport* {
    for (const auto& r : reps)
      if (r.map == n) return &r;
    return nullptr;
  };
  const SmoothnessReport* e2l = find("exp_to_log");
  const SmoothnessReport* l2e = find("log_to_exp");
  const SmoothnessReport* ce = find("compose_exp");
  const SmoothnessReport* cl = find("compose_log");
  if (!e2l || !l2e || !ce || !cl) {
    ok = false;
  } else {
    // Exp -> Log: continuous, C1, Jacobian norms decaying toward 0.
    if (!(e2l->continuous && e2l->c1)) ok = false, note += "[exp_to_log verdict]";
    if (e2l->jac_norms.size() != 4)
      ok = false;
    else
      for (size_t i = 0; i < 4; ++i) {
        const double radii[4] = {0.1, 0.05, 0.02, 0.01};
        if (std::fabs(e2l->jac_norms[i].radius - radii[i]) > 1e-15) ok = false;
        if (i > 0 && !(e2l->jac_norms[i].log_norm < e2l->jac_norms[i - 1].log_norm))
          ok = false, note += "[jac decay]";
      }
    // Log -> Exp: continuous, not C1, quotient blow-up past 1e3 by x = 1e-4.
    if (!(l2e->continuous && !l2e->c1)) ok = false, note += "[log_to_exp verdict]";
    double x = 1e-4;
    GluingProfile lg = GluingProfile::log_profile();
    GluingProfile ex = GluingProfile::exp_profile();
    if (!(ex.inverse(lg.forward(x)) / x > 1e3)) ok = false, note += "[quotient]";
    // Exp composition: continuous, not C1, eight directional limits match the
    // closed form within 1e-3.
    if (!(ce->continuous && !ce->c1)) ok = false, note += "[compose_exp verdict]";
    if (ce->directions.size() < 8) ok = false;
    for (const DirectionEvidence& ev : ce->directions) {
      double r1 = std::hypot(ev.v[0], ev.v[1]), t1 = std::atan2(ev.v[1], ev.v[0]);
      double r2 = std::hypot(ev.v[2], ev.v[3]), t2 = std::atan2(ev.v[3], ev.v[2]);
      RealVec cf = compose_directional_closed_form(r1, t1, r2, t2);
      for (size_t i = 0; i < cf.size(); ++i)
        if (std::fabs(ev.limit[i] - cf[i]) > 1e-3) ok = false, note += "[direction]";
    }
    if (!(cl->continuous && cl->c1)) ok = false, note += "[compose_log verdict]";
  }
  double secs = t.seconds();
  report(3, "smoothness verdict battery", ok && secs < 10.0, secs, note);
}

void criterion_4() {
  Timer t;
  Rng rng(424242);
  GluingProfile exp = GluingProfile::exp_profile();
  const int ns = 65, nt = 32;
  double worst = 0;
  for (int trial = 0; trial < 20; ++trial) {
    GluingParameter a =
        GluingParameter::from_polar(rng.uniform(0.22, 0.45), rng.next_double());
    GluingParameter b =
        GluingParameter::from_polar(rng.uniform(0.22, 0.45), rng.next_double());
    double R = gluing_length(a, exp).value() + gluing_length(b, exp).value();
    double ds = R / (ns - 1);
    std::vector<double> c = {rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)};
    CylinderField xp = band_limited_field(rng, 0.0, ds, ns, nt, 2, c);
    CylinderField xm = band_limited_field(rng, -R, ds, ns, nt, 2, c);

    // glue_uc(a, b) vs glue(a * b).
    GluedResult uc = glue_uc(xp, xm, a, b);
    GluedResult one = glue(xp, xm, compose(a, b, exp), exp);
    worst = std::max(worst, max_field_diff(uc.parts[0], one.parts[0]));

    auto [ep, em] = retract(xp, xm, a, b);
    // Pregluing preserved by the retraction.
    GluedResult ge = glue_uc(ep, em, a, b);
    worst = std::max(worst, max_field_diff(uc.parts[0], ge.parts[0]));
    // Anti-gluing of the retracted pair vanishes.
    AntiglueResult anti = antiglue_uc(ep, em, a, b);
    for (double x : anti.field.samples) worst = std::max(worst, std::fabs(x));
    // Idempotence.
    auto [ep2, em2] = retract(ep, em, a, b);
    worst = std::max(worst, max_field_diff(ep2, ep));
    worst = std::max(worst, max_field_diff(em2, em));
  }
  double secs = t.seconds();
  report(4, "cylinder gluing/anti-gluing/retraction", worst <= 1e-9 && secs < 30.0,
         secs, "max residual = " + std::to_string(worst));
}

void criterion_5() {
  Timer t;
  std::vector<CounterexampleRow> rows = continuity_counterexample(50, 0.45, {1.0, 0.5});
  bool ok = rows.size() == 50;
  for (size_t i = 0; i < rows.size() && ok; ++i) {
    if (!(rows[i].target_norm > 1.0)) ok = false;
    if (i > 0 && !(rows[i].source_norm < rows[i - 1].source_norm)) ok = false;
  }
  double secs = t.seconds();
  report(5, "gluing-map continuity counterexample", ok && secs < 5.0, secs,
         ok ? "source v target at n=50: " + std::to_string(rows.back().source_norm) +
                  " v " + std::to_string(rows.back().target_norm)
            : "monotonicity or bound violated");
}

void criterion_6(const std::vector<StableCurveGraph>& universe) {
  Timer t;
  long violations = 0, forgot = 0, sections = 0, stabilized = 0, empty = 0;
  for (const StableCurveGraph& g : universe) {
    if (!check_gw_stability(g).overall) ++violations;
    if (g.k() >= 1) {
      if (!check_uc_stability(g)) {
        ++violations;
      } else {
        ForgetResult r = forget_point(g);
        if (r.empty_target) {
          ++empty;
        } else {
          ++forgot;
          if (arithmetic_genus(*r.graph) != arithmetic_genus(g)) ++violations;
          if (r.graph->k() != g.k() - 1) ++violations;
          if (!check_gw_stability(*r.graph).overall) ++violations;
        }
      }
    }
    // Cache the canonical forms so each isomorphism test costs one
    // canonicalization instead of two.
    const std::string cg = g.k() > 0 ? canonical_string(g) : std::string();
    for (int i = 1; i <= g.k(); ++i) {
      ++sections;
      ForgetResult r = forget_point(canonical_section(g, i));
      if (r.empty_target || canonical_string(*r.graph) != cg) ++violations;
    }
    if (2 * arithmetic_genus(g) + g.k() >= 3) {
      ++stabilized;
      StableCurveGraph s = stabilize_project(g);
      if (!check_dm_stability(s).overall) ++violations;
      const std::string cs = canonical_string(s);
      if (canonical_string(stabilize_project(s)) != cs) ++violations;
      if (canonical_string(stabilize_project(reversed_components(g))) != cs) ++violations;
    }
  }
  double secs = t.seconds();
  report(6, "dual-graph universe suite", violations == 0 && secs < 60.0, secs,
         std::to_string(universe.size()) + " graphs, " + std::to_string(forgot) +
             " forgets (" + std::to_string(empty) + " empty targets), " +
             std::to_string(sections) + " sections, " + std::to_string(stabilized) +
             " stabilizations, " + std::to_string(violations) + " violations");
}

void criterion_7() {
  Timer t;
  std::map<long, Rational> direct = kontsevich(5);
  std::map<long, Rational> via = kontsevich_via_splitting(5);
  const long expect[5] = {1, 1, 12, 620, 87304};
  bool ok = true;
  for (long d = 1; d <= 5; ++d) {
    if (direct.at(d) != Rational(expect[d - 1])) ok = false;
    if (via.at(d) != direct.at(d)) ok = false;
  }
  double secs = t.seconds();
  report(7, "plane-curve counts, two derivations", ok && secs < 1.0, secs,
         "N_5 = " + format_rational(direct.at(5)));
}

void criterion_8() {
  Timer t;
  CohomologyRing cp1 = CohomologyRing::cp1_ring();
  CohomologyRing cp2 = CohomologyRing::cp2_ring();
  std::map<long, Rational> nd = kontsevich(3);
  DiagonalDecomposition d1 = diagonal_decomposition(cp1);
  DiagonalDecomposition d2 = diagonal_decomposition(cp2);
  CorrelatorTable t1 = cp1_fixture_table(cp1);
  CorrelatorTable t2 = cp2_fixture_table(cp2, nd, 2, 5);

  bool clean = true;
  for (const CorrelatorTable* t : {&t1, &t2}) {
    const DiagonalDecomposition& d = (t == &t1) ? d1 : d2;
    clean = clean && check_effective(*t).passed && check_grading(*t).passed &&
            check_zero(*t).passed && check_symmetry(*t, {2, 1, 3, 4}).passed &&
            check_fundamental_class(*t).passed && check_divisor(*t).passed &&
            check_splitting(*t, d).passed && check_genus_reduction(*t, d).passed;
  }

  int caught = 0;
  const size_t U = 0, H = 1, P = 2;
  {
    CorrelatorTable x = cp2_fixture_table(cp2, nd, 2, 4);
    x.set({-1, 0, 3, {H, H, H}, DMClass::fundamental(0, 3)}, Rational(1));
    caught += !check_effective(x).passed;
  }
  {
    CorrelatorTable x = cp2_fixture_table(cp2, nd, 2, 4);
    x.set({1, 0, 3, {H, H, H}, DMClass::fundamental(0, 3)}, Rational(1));
    caught += !check_grading(x).passed;
  }
  {
    CorrelatorTable x = cp2_fixture_table(cp2, nd, 2, 4);
    x.set({0, 0, 3, {U, H, P}, DMClass::fundamental(0, 3)}, Rational(7));
    caught += !check_zero(x).passed;
  }
  {
    CohomologyRing torus = CohomologyRing::torus_ring();  // must outlive the table
    CorrelatorTable x = torus_fixture_table(torus);
    x.set({0, 0, 3, {1, 2, 0}, DMClass::pt()}, Rational(5));
    caught += !check_symmetry(x, {2, 1, 3}).passed;
  }
  {
    CorrelatorTable x = cp2_fixture_table(cp2, nd, 2, 4);
    x.set({1, 0, 4, {P, P, H, U}, DMClass::fundamental(0, 4)}, Rational(1));
    caught += !check_fundamental_class(x).passed;
  }
  {
    CorrelatorTable x = cp2_fixture_table(cp2, nd, 2, 4);
    x.set({1, 0, 4, {P, P, H, H}, DMClass::ft_pullback_pd(DMClass::fundamental(0, 3))},
          Rational(5));
    caught += !check_divisor(x).passed;
  }
  {
    CorrelatorTable x = cp2_fixture_table(cp2, nd, 2, 5);
    x.set({1, 0, 5, {P, P, H, H, U},
           DMClass::split({1, 2, 3}, DMClass::fundamental(0, 4),
                          DMClass::fundamental(0, 3))},
          Rational(99));
    caught += !check_splitting(x, d2).passed;
  }
  {
    CorrelatorTable x = cp2_fixture_table(cp2, nd, 2, 5);
    x.set({1, 1, 3, {P, P, H}, DMClass::genus_reduce(DMClass::fundamental(0, 5))},
          Rational(1));
    caught += !check_genus_reduction(x, d2).passed;
  }
  double secs = t.seconds();
  report(8, "axiom suite + eight-way detector", clean && caught == 8, secs,
         std::string(clean ? "clean tables pass" : "CLEAN TABLE FAILS") + ", " +
             std::to_string(caught) + "/8 perturbations caught");
}

void criterion_9() {
  Timer t;
  bool ok = true;
  for (const CohomologyRing& r :
       {CohomologyRing::cp1_ring(), CohomologyRing::cp2_ring(),
        CohomologyRing::kunneth_product(CohomologyRing::cp1_ring(),
                                        CohomologyRing::cp1_ring())})
    ok = ok && verify_diagonal(r, diagonal_decomposition(r));
  // The sign correction matters: flipping one sign on an odd ring must fail.
  CohomologyRing torus = CohomologyRing::torus_ring();
  DiagonalDecomposition dec = diagonal_decomposition(torus);
  ok = ok && verify_diagonal(torus, dec);
  DiagonalDecomposition bad = dec;
  for (auto& term : bad.terms) term.sign = 1;
  ok = ok && !verify_diagonal(torus, bad);
  report(9, "diagonal decomposition, exact", ok, t.seconds(), "");
}

void criterion_10(const std::vector<StableCurveGraph>& universe) {
  Timer t;
  long bad = 0;
  for (const StableCurveGraph& g : universe) {
    nlohmann::ordered_json j = graph_to_json(g);
    StableCurveGraph back = graph_from_json(j);
    if (!(back == g) || graph_to_json(back).dump() != j.dump()) ++bad;
  }
  CohomologyRing cp2 = CohomologyRing::cp2_ring();
  CorrelatorTable table = cp2_fixture_table(cp2, kontsevich(3), 2, 4);
  nlohmann::ordered_json tj = table.to_json();
  if (CorrelatorTable::from_json(tj, cp2).to_json().dump() != tj.dump()) ++bad;
  report(10, "JSON round trips over the universe", bad == 0, t.seconds(),
         std::to_string(universe.size()) + " graphs + 1 table, " +
             std::to_string(bad) + " mismatches");
}

}  // namespace

int main() {
  std::printf("acceptance gate\n");
  criterion_1_2();
  criterion_3();
  criterion_4();
  criterion_5();
  std::vector<StableCurveGraph> universe = enumerate_gw_universe(UniverseConfig{4, 2, 5});
  criterion_6(universe);
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10(universe);
  std::printf("%s (%d/10 criteria failed)\n", failures == 0 ? "ALL PASS" : "FAILURES",
              failures);
  return failures;
}
