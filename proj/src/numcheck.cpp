#include "gw/numcheck.hpp"

#include <cmath>

namespace gw {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

double norm2(const RealVec& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

RealVec scaled(const RealVec& v, double c) {
  RealVec out = v;
  for (double& x : out) x *= c;
  return out;
}
}  // namespace

LogVec MapUnderTest::eval_log_or_wrap(const RealVec& x) const {
  if (eval_log) return eval_log(x);
  RealVec y = eval(x);
  LogVec out(y.size());
  for (size_t i = 0; i < y.size(); ++i) out[i] = LogReal::from_double(y[i]);
  return out;
}

std::vector<RealVec> fd_jacobian(const MapUnderTest& f, const RealVec& x, double h) {
  if (!(h > 0)) throw std::invalid_argument("fd_jacobian: h must be positive");
  std::vector<RealVec> J(size_t(f.dim_out), RealVec(size_t(f.dim_in), 0.0));
  for (int j = 0; j < f.dim_in; ++j) {
    RealVec xp = x, xm = x;
    xp[size_t(j)] += h;
    xm[size_t(j)] -= h;
    RealVec fp = f.eval(xp), fm = f.eval(xm);
    for (int i = 0; i < f.dim_out; ++i)
      J[size_t(i)][size_t(j)] = (fp[size_t(i)] - fm[size_t(i)]) / (2 * h);
  }
  return J;
}

std::vector<LogVec> fd_jacobian_log(const MapUnderTest& f, const RealVec& x, double h) {
  if (!(h > 0)) throw std::invalid_argument("fd_jacobian: h must be positive");
  std::vector<LogVec> J(size_t(f.dim_out), LogVec(size_t(f.dim_in)));
  LogReal inv2h = LogReal::from_double(1.0 / (2 * h));
  for (int j = 0; j < f.dim_in; ++j) {
    RealVec xp = x, xm = x;
    xp[size_t(j)] += h;
    xm[size_t(j)] -= h;
    LogVec fp = f.eval_log_or_wrap(xp), fm = f.eval_log_or_wrap(xm);
    for (int i = 0; i < f.dim_out; ++i)
      J[size_t(i)][size_t(j)] = (fp[size_t(i)] - fm[size_t(i)]) * inv2h;
  }
  return J;
}

double log_frobenius(const std::vector<LogVec>& m) {
  LogReal s = LogReal::zero();
  for (const LogVec& row : m)
    for (const LogReal& e : row) s = s + e * e;
  if (s.is_zero()) return -std::numeric_limits<double>::infinity();
  return 0.5 * s.log_mag;
}

DirectionalLimit directional_derivative_limit(const MapUnderTest& f, const RealVec& v,
                                              const std::vector<double>& hs,
                                              double tol) {
  if (std::fabs(norm2(v) - 1.0) > 1e-9)
    throw std::invalid_argument("directional_derivative_limit: direction not unit");
  for (size_t i = 1; i < hs.size(); ++i)
    if (!(hs[i] < hs[i - 1]))
      throw std::invalid_argument("directional_derivative_limit: hs must decrease");

  DirectionalLimit out;
  for (double h : hs) {
    RealVec y = f.eval(scaled(v, h));
    out.quotients.push_back(scaled(y, 1.0 / h));
  }
  const size_t n = out.quotients.size();
  const RealVec& q1 = out.quotients[n - 1];
  const RealVec& q0 = out.quotients[n - 2];
  // First-order Richardson: q(h) ~ L + C h.
  double h1 = hs[n - 1], h0 = hs[n - 2];
  out.estimate = RealVec(q1.size());
  for (size_t i = 0; i < q1.size(); ++i)
    out.estimate[i] = q1[i] + (q1[i] - q0[i]) * h1 / (h0 - h1);
  double diff = 0;
  for (size_t i = 0; i < q1.size(); ++i) diff = std::max(diff, std::fabs(q1[i] - q0[i]));
  out.converged = diff < tol;
  return out;
}

MapUnderTest transition_map(const GluingProfile& from, const GluingProfile& to,
                            std::string name) {
  MapUnderTest m;
  m.name = std::move(name);
  m.dim_in = 2;
  m.dim_out = 2;
  auto log_eval = [from, to](const RealVec& x) {
    LogVec out(2);
    double r = std::hypot(x[0], x[1]);
    if (r == 0.0) return out;  // zeros
    GluingParameter a = GluingParameter::from_log_polar(std::log(r), 0.0);
    GluingParameter b = transition(a, from, to);
    // Modulus scales by t/r; the direction (x/r, y/r) is unchanged.
    LogReal scale(b.log_r() - std::log(r), 1);
    out[0] = scale * LogReal::from_double(x[0]);
    out[1] = scale * LogReal::from_double(x[1]);
    return out;
  };
  m.eval_log = log_eval;
  m.eval = [log_eval](const RealVec& x) {
    LogVec y = log_eval(x);
    return RealVec{y[0].to_double(), y[1].to_double()};
  };
  return m;
}

MapUnderTest compose_map(const GluingProfile& p, std::string name) {
  MapUnderTest m;
  m.name = std::move(name);
  m.dim_in = 4;
  m.dim_out = 2;
  m.eval = [p](const RealVec& x) {
    std::complex<double> a(x[0], x[1]), b(x[2], x[3]);
    if (a == 0.0 || b == 0.0) return RealVec{0.0, 0.0};
    GluingParameter c = compose(GluingParameter::from_complex(a),
                                GluingParameter::from_complex(b), p);
    std::complex<double> v = c.value();
    return RealVec{v.real(), v.imag()};
  };
  return m;
}

RealVec compose_directional_closed_form(double r1, double t1, double r2, double t2) {
  double r = std::min(r1, r2);
  return {r * std::cos(t1 + t2), r * std::sin(t1 + t2)};
}

namespace {

std::vector<RealVec> default_directions(int dim) {
  std::vector<RealVec> dirs;
  if (dim == 2) {
    for (int j = 0; j < 8; ++j) {
      double t = kTwoPi * j / 8.0;
      dirs.push_back({std::cos(t), std::sin(t)});
    }
  } else {
    // (r1, t1, r2, t2) with r1^2 + r2^2 = 1; mixes equal/unequal radii and
    // nontrivial angle sums.
    const double s = 1.0 / std::sqrt(2.0);
    const std::array<std::array<double, 4>, 8> polar = {{{s, 0.0, s, 0.0},
                                                         {0.6, 0.0, 0.8, 0.0},
                                                         {0.8, 0.0, 0.6, 0.0},
                                                         {0.28, 0.0, 0.96, 0.0},
                                                         {s, kTwoPi / 8, s, kTwoPi / 16},
                                                         {0.6, kTwoPi / 4, 0.8, 0.0},
                                                         {0.8, kTwoPi / 16, 0.6, kTwoPi / 16},
                                                         {0.96, kTwoPi / 3, 0.28, kTwoPi / 5}}};
    for (const auto& q : polar)
      dirs.push_back({q[0] * std::cos(q[1]), q[0] * std::sin(q[1]),
                      q[2] * std::cos(q[3]), q[2] * std::sin(q[3])});
  }
  return dirs;
}

}  // namespace

SmoothnessReport smoothness_report(const MapUnderTest& f, const SmoothnessConfig& cfg) {
  SmoothnessReport rep;
  rep.map = f.name;
  rep.region = "|x| < " + std::to_string(cfg.region_radius);

  std::vector<RealVec> dirs =
      cfg.directions.empty() ? default_directions(f.dim_in) : cfg.directions;

  // Continuity: |F(r v)| along each ray, in log scale, must be finite and
  // non-increasing as r shrinks (F(0) = 0 for every map under test).
  rep.continuous = true;
  rep.max_jump = 0;
  for (const RealVec& v : dirs) {
    double prev = std::numeric_limits<double>::infinity();
    double last = 0;
    for (int j = 0; j <= 14; ++j) {
      double r = cfg.region_radius * std::pow(2.0, -j);
      LogVec y = f.eval_log_or_wrap(scaled(v, r));
      LogReal mag = LogReal::zero();
      for (const LogReal& c : y) mag = mag + c * c;
      double lm = mag.is_zero() ? -std::numeric_limits<double>::infinity()
                                : 0.5 * mag.log_mag;
      if (std::isnan(lm) || lm == std::numeric_limits<double>::infinity())
        rep.continuous = false;
      if (lm > prev + 1e-9) rep.continuous = false;
      prev = lm;
      last = std::exp(lm);
    }
    rep.max_jump = std::max(rep.max_jump, last);
  }

  // Jacobian-norm decay samples along the x-axis.
  for (double rad : cfg.jac_radii) {
    RealVec x(size_t(f.dim_in), 0.0);
    x[0] = rad;
    auto J = fd_jacobian_log(f, x, rad / 8.0);
    JacNormSample s;
    s.radius = rad;
    s.log_norm = log_frobenius(J);
    s.norm = std::exp(s.log_norm);
    rep.jac_norms.push_back(s);
  }

  // C1 at the base point: two-scale Jacobian agreement plus directional match.
  RealVec origin(size_t(f.dim_in), 0.0);
  auto Jh = fd_jacobian(f, origin, cfg.fd_h);
  auto Jq = fd_jacobian(f, origin, cfg.fd_h / 4.0);
  double scale_diff = 0, jnorm = 0;
  for (int i = 0; i < f.dim_out; ++i)
    for (int j = 0; j < f.dim_in; ++j) {
      scale_diff = std::max(scale_diff,
                            std::fabs(Jh[size_t(i)][size_t(j)] - Jq[size_t(i)][size_t(j)]));
      jnorm = std::max(jnorm, std::fabs(Jq[size_t(i)][size_t(j)]));
    }
  rep.jac_two_scale_diff = scale_diff;
  bool c1 = scale_diff <= cfg.tol_c1 * std::max(1.0, jnorm);

  std::vector<double> hs;
  for (int j = 0; j <= 8; ++j) hs.push_back(1e-2 * std::pow(2.0, -j));
  for (const RealVec& v : dirs) {
    DirectionEvidence ev;
    ev.v = v;
    DirectionalLimit dl = directional_derivative_limit(f, v, hs, cfg.tol_c1 * 10);
    ev.limit = dl.estimate;
    ev.converged = dl.converged;
    ev.jacobian_v = RealVec(size_t(f.dim_out), 0.0);
    for (int i = 0; i < f.dim_out; ++i)
      for (int j = 0; j < f.dim_in; ++j)
        ev.jacobian_v[size_t(i)] += Jq[size_t(i)][size_t(j)] * v[size_t(j)];
    double mism = 0, lim = 0;
    for (int i = 0; i < f.dim_out; ++i) {
      mism = std::max(mism, std::fabs(ev.jacobian_v[size_t(i)] - ev.limit[size_t(i)]));
      lim = std::max(lim, std::fabs(ev.limit[size_t(i)]));
    }
    ev.mismatch = mism;
    if (!dl.converged || mism > cfg.tol_c1 * std::max(1.0, lim)) c1 = false;
    rep.directions.push_back(std::move(ev));
  }
  rep.c1 = c1;
  return rep;
}

std::vector<SmoothnessReport> builtin_profile_reports(double tol_c1) {
  GluingProfile lg = GluingProfile::log_profile();
  GluingProfile ex = GluingProfile::exp_profile();
  std::vector<SmoothnessReport> out;

  SmoothnessConfig cfg;
  cfg.tol_c1 = tol_c1;

  SmoothnessConfig exp_to_log_cfg = cfg;
  exp_to_log_cfg.jac_radii = {0.1, 0.05, 0.02, 0.01};
  out.push_back(smoothness_report(transition_map(ex, lg, "exp_to_log"), exp_to_log_cfg));

  out.push_back(smoothness_report(transition_map(lg, ex, "log_to_exp"), cfg));
  out.push_back(smoothness_report(compose_map(ex, "compose_exp"), cfg));
  out.push_back(smoothness_report(compose_map(lg, "compose_log"), cfg));
  return out;
}

}  // namespace gw
