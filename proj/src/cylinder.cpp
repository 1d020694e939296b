#include "gw/cylinder.hpp"

#include <cmath>

namespace gw {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

const CutoffFunction& cutoff() {
  static const CutoffFunction beta;
  return beta;
}

void check_compatible(const CylinderField& a, const CylinderField& b) {
  if (a.nt != b.nt || a.dim != b.dim)
    throw CylinderError("cylinder fields have mismatched grids");
  for (int d = 0; d < a.dim; ++d)
    if (std::fabs(a.asymptotic[size_t(d)] - b.asymptotic[size_t(d)]) > 1e-12)
      throw CylinderError("asymptotic constants do not match");
}

std::vector<double> mean_circle(const CylinderField& f, double s) {
  std::vector<double> m(size_t(f.dim), 0.0);
  for (int j = 0; j < f.nt; ++j) {
    std::vector<double> v = f.eval(s, j);
    for (int d = 0; d < f.dim; ++d) m[size_t(d)] += v[size_t(d)];
  }
  for (double& x : m) x /= f.nt;
  return m;
}

double neck_value(const GluingParameter& a, const GluingProfile& p) {
  NeckLength R = gluing_length(a, p);
  double v = R.value();
  if (!std::isfinite(v)) throw CylinderError("neck length overflows the grid scale");
  return v;
}

}  // namespace

CylinderField CylinderField::sample(
    double s0, double ds, int ns, int nt, int dim,
    const std::function<std::vector<double>(double, double)>& fn,
    std::vector<double> asymptotic) {
  if (ns < 2 || nt < 8) throw CylinderError("grid too coarse (need ns >= 2, nt >= 8)");
  CylinderField f;
  f.s0 = s0;
  f.ds = ds;
  f.ns = ns;
  f.nt = nt;
  f.dim = dim;
  f.asymptotic = std::move(asymptotic);
  f.samples.resize(size_t(ns) * size_t(nt) * size_t(dim));
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < nt; ++j) {
      std::vector<double> v = fn(s0 + i * ds, double(j) / nt);
      for (int d = 0; d < dim; ++d) f.at(i, j, d) = v[size_t(d)];
    }
  return f;
}

std::vector<double> CylinderField::eval(double s, int it) const {
  std::vector<double> out(size_t(dim), 0.0);
  double x = (s - s0) / ds;
  if (x <= -1e-9 || x >= ns - 1 + 1e-9) return asymptotic;
  int i0 = int(std::floor(x));
  if (i0 < 0) i0 = 0;
  if (i0 > ns - 2) i0 = ns - 2;
  double w = x - i0;
  if (w < 1e-12) w = 0;  // snap to grid rows: aligned calls stay exact
  if (w > 1 - 1e-12) w = 1;
  for (int d = 0; d < dim; ++d)
    out[size_t(d)] = (1 - w) * at(i0, it, d) + w * at(i0 + 1, it, d);
  return out;
}

CylinderField shift_t(const CylinderField& f, double theta) {
  double frac = theta * f.nt;
  double rounded = std::round(frac);
  CylinderField g = f;
  if (std::fabs(frac - rounded) < 1e-12) {
    // Exact index rotation: g(t_j) = f(t_{j - shift}).
    int sh = int(std::lround(rounded)) % f.nt;
    if (sh < 0) sh += f.nt;
    for (int i = 0; i < f.ns; ++i)
      for (int j = 0; j < f.nt; ++j) {
        int src = (j - sh) % f.nt;
        if (src < 0) src += f.nt;
        for (int d = 0; d < f.dim; ++d) g.at(i, j, d) = f.at(i, src, d);
      }
    return g;
  }
  // Trigonometric interpolation row by row.
  const int nt = f.nt;
  const int kmax = nt / 2;
  std::vector<double> a(size_t(kmax + 1)), b(size_t(kmax + 1));
  for (int i = 0; i < f.ns; ++i)
    for (int d = 0; d < f.dim; ++d) {
      for (int k = 0; k <= kmax; ++k) {
        double ca = 0, cb = 0;
        for (int m = 0; m < nt; ++m) {
          double ang = kTwoPi * k * m / nt;
          ca += f.at(i, m, d) * std::cos(ang);
          cb += f.at(i, m, d) * std::sin(ang);
        }
        a[size_t(k)] = ca;
        b[size_t(k)] = cb;
      }
      for (int j = 0; j < nt; ++j) {
        double t = double(j) / nt - theta;
        double sum = a[0];
        for (int k = 1; k <= kmax; ++k) {
          double ang = kTwoPi * k * t;
          double factor = (2 * k == nt) ? 1.0 : 2.0;  // Nyquist counted once
          sum += factor * (a[size_t(k)] * std::cos(ang) + b[size_t(k)] * std::sin(ang));
        }
        g.at(i, j, d) = sum / nt;
      }
    }
  return g;
}

namespace {

CylinderField glue_core(const CylinderField& hp, const CylinderField& hm, double R,
                        double theta) {
  const CutoffFunction& beta = cutoff();
  CylinderField hms = shift_t(hm, theta);
  CylinderField out;
  out.s0 = 0;
  out.ns = hp.ns;
  out.ds = R / (out.ns - 1);
  out.nt = hp.nt;
  out.dim = hp.dim;
  out.asymptotic = hp.asymptotic;
  out.samples.resize(size_t(out.ns) * size_t(out.nt) * size_t(out.dim));
  for (int i = 0; i < out.ns; ++i) {
    double s = i * out.ds;
    double B = beta(s - R / 2);
    for (int j = 0; j < out.nt; ++j) {
      std::vector<double> vp = hp.eval(s, j);
      std::vector<double> vm = hms.eval(s - R, j);
      for (int d = 0; d < out.dim; ++d)
        out.at(i, j, d) = B * vp[size_t(d)] + (1 - B) * vm[size_t(d)];
    }
  }
  return out;
}

CylinderField constant_field(const CylinderField& like, const std::vector<double>& c) {
  CylinderField f;
  f.s0 = 0;
  f.ds = 1;
  f.ns = 2;
  f.nt = like.nt;
  f.dim = like.dim;
  f.asymptotic = c;
  f.samples.resize(size_t(f.ns) * size_t(f.nt) * size_t(f.dim));
  for (int i = 0; i < f.ns; ++i)
    for (int j = 0; j < f.nt; ++j)
      for (int d = 0; d < f.dim; ++d) f.at(i, j, d) = c[size_t(d)];
  return f;
}

}  // namespace

GluedResult glue(const CylinderField& hplus, const CylinderField& hminus,
                 const GluingParameter& a, const GluingProfile& p) {
  check_compatible(hplus, hminus);
  if (a.is_zero()) return {{hplus, hminus}};
  return {{glue_core(hplus, hminus, neck_value(a, p), a.theta())}};
}

GluedResult glue_uc(const CylinderField& hplus, const CylinderField& hminus,
                    const GluingParameter& a, const GluingParameter& b) {
  check_compatible(hplus, hminus);
  if (a.is_zero() && b.is_zero())
    return {{hplus, constant_field(hplus, hplus.asymptotic), hminus}};
  if (a.is_zero() || b.is_zero()) return {{hplus, hminus}};
  GluingProfile exp = GluingProfile::exp_profile();
  double R = neck_value(a, exp) + neck_value(b, exp);
  double theta = a.theta() + b.theta();
  return {{glue_core(hplus, hminus, R, theta)}};
}

AntiglueResult antiglue_uc(const CylinderField& etaplus, const CylinderField& etaminus,
                           const GluingParameter& a, const GluingParameter& b) {
  check_compatible(etaplus, etaminus);
  AntiglueResult out;
  if (a.is_zero() || b.is_zero()) {
    out.empty = true;
    return out;
  }
  const CutoffFunction& beta = cutoff();
  GluingProfile exp = GluingProfile::exp_profile();
  double R = neck_value(a, exp) + neck_value(b, exp);
  double theta = a.theta() + b.theta();

  std::vector<double> avp = mean_circle(etaplus, R / 2);
  std::vector<double> avm = mean_circle(etaminus, -R / 2);
  out.average.resize(size_t(etaplus.dim));
  for (int d = 0; d < etaplus.dim; ++d)
    out.average[size_t(d)] = 0.5 * (avp[size_t(d)] + avm[size_t(d)]);

  CylinderField ems = shift_t(etaminus, theta);
  CylinderField& f = out.field;
  f.s0 = 0;
  f.ns = etaplus.ns;
  f.ds = R / (f.ns - 1);
  f.nt = etaplus.nt;
  f.dim = etaplus.dim;
  f.asymptotic.assign(size_t(f.dim), 0.0);
  f.samples.resize(size_t(f.ns) * size_t(f.nt) * size_t(f.dim));
  for (int i = 0; i < f.ns; ++i) {
    double s = i * f.ds;
    double B = beta(s - R / 2);
    for (int j = 0; j < f.nt; ++j) {
      std::vector<double> vp = etaplus.eval(s, j);
      std::vector<double> vm = ems.eval(s - R, j);
      for (int d = 0; d < f.dim; ++d)
        f.at(i, j, d) = -(1 - B) * (vp[size_t(d)] - out.average[size_t(d)]) +
                        B * (vm[size_t(d)] - out.average[size_t(d)]);
    }
  }
  return out;
}

std::pair<CylinderField, CylinderField> retract(const CylinderField& xiplus,
                                                const CylinderField& ximinus,
                                                const GluingParameter& a,
                                                const GluingParameter& b) {
  check_compatible(xiplus, ximinus);
  if (a.is_zero() || b.is_zero()) return {xiplus, ximinus};
  const CutoffFunction& beta = cutoff();
  GluingProfile exp = GluingProfile::exp_profile();
  double R = neck_value(a, exp) + neck_value(b, exp);
  double theta = a.theta() + b.theta();

  std::vector<double> avp = mean_circle(xiplus, R / 2);
  std::vector<double> avm = mean_circle(ximinus, -R / 2);
  std::vector<double> av(size_t(xiplus.dim), 0.0);
  for (int d = 0; d < xiplus.dim; ++d)
    av[size_t(d)] = 0.5 * (avp[size_t(d)] + avm[size_t(d)]);

  CylinderField xims = shift_t(ximinus, theta);   // xi-(s - R, t - theta)
  CylinderField xips = shift_t(xiplus, -theta);   // xi+(s + R, t + theta)

  CylinderField etap = xiplus;
  for (int i = 0; i < etap.ns; ++i) {
    double s = etap.s0 + i * etap.ds;
    double B = beta(s - R / 2);
    double G = B * B + (1 - B) * (1 - B);
    for (int j = 0; j < etap.nt; ++j) {
      std::vector<double> vp = xiplus.eval(s, j);
      std::vector<double> vm = xims.eval(s - R, j);
      for (int d = 0; d < etap.dim; ++d)
        etap.at(i, j, d) = (1 - B / G) * av[size_t(d)] + (B * B / G) * vp[size_t(d)] +
                           (B * (1 - B) / G) * vm[size_t(d)];
    }
  }
  etap.asymptotic = av;  // eta+ = av once beta(s - R/2) = 0

  CylinderField etam = ximinus;
  for (int i = 0; i < etam.ns; ++i) {
    double sm = etam.s0 + i * etam.ds;
    double B = beta(-sm - R / 2);  // = 1 - beta_ab(sm + R)
    double G = B * B + (1 - B) * (1 - B);
    for (int j = 0; j < etam.nt; ++j) {
      std::vector<double> vp = xips.eval(sm + R, j);
      std::vector<double> vm = ximinus.eval(sm, j);
      for (int d = 0; d < etam.dim; ++d)
        etam.at(i, j, d) = (1 - B / G) * av[size_t(d)] +
                           (B * (1 - B) / G) * vp[size_t(d)] + (B * B / G) * vm[size_t(d)];
    }
  }
  etam.asymptotic = av;
  return {etap, etam};
}

namespace {

// One s-derivative (2nd-order stencils, one-sided at the ends).
std::vector<double> deriv_s(const std::vector<double>& u, int ns, int nt, int dim,
                            double ds) {
  std::vector<double> out(u.size());
  auto idx = [&](int i, int j, int d) { return size_t((i * nt + j) * dim + d); };
  for (int j = 0; j < nt; ++j)
    for (int d = 0; d < dim; ++d) {
      out[idx(0, j, d)] =
          (-3 * u[idx(0, j, d)] + 4 * u[idx(1, j, d)] - u[idx(2, j, d)]) / (2 * ds);
      out[idx(ns - 1, j, d)] = (3 * u[idx(ns - 1, j, d)] - 4 * u[idx(ns - 2, j, d)] +
                                u[idx(ns - 3, j, d)]) /
                               (2 * ds);
      for (int i = 1; i < ns - 1; ++i)
        out[idx(i, j, d)] = (u[idx(i + 1, j, d)] - u[idx(i - 1, j, d)]) / (2 * ds);
    }
  return out;
}

// One t-derivative (periodic central differences; dt = 1/nt).
std::vector<double> deriv_t(const std::vector<double>& u, int ns, int nt, int dim) {
  std::vector<double> out(u.size());
  double dt = 1.0 / nt;
  auto idx = [&](int i, int j, int d) { return size_t((i * nt + j) * dim + d); };
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < nt; ++j) {
      int jp = (j + 1) % nt, jm = (j + nt - 1) % nt;
      for (int d = 0; d < dim; ++d)
        out[idx(i, j, d)] = (u[idx(i, jp, d)] - u[idx(i, jm, d)]) / (2 * dt);
    }
  return out;
}

}  // namespace

double weighted_norm_sq(const CylinderField& f, const WeightedNormSpec& spec) {
  if (spec.max_order > 2)
    throw CylinderError("weighted norm: derivative order capped at 2");
  if (f.ns < 5) throw CylinderError("weighted norm: grid too coarse for stencils");
  if (spec.delta.empty()) throw CylinderError("weighted norm: empty delta sequence");
  for (size_t i = 0; i < spec.delta.size(); ++i) {
    if (!(spec.delta[i] > 0 && spec.delta[i] < kTwoPi))
      throw CylinderError("weighted norm: delta outside (0, 2pi)");
    if (i > 0 && !(spec.delta[i] > spec.delta[i - 1]))
      throw CylinderError("weighted norm: delta sequence must increase");
  }
  const double delta = spec.delta[std::min(size_t(spec.m), spec.delta.size() - 1)];

  std::vector<double> base = f.samples;
  for (int i = 0; i < f.ns; ++i)
    for (int j = 0; j < f.nt; ++j)
      for (int d = 0; d < f.dim; ++d)
        base[size_t((i * f.nt + j) * f.dim + d)] -= f.asymptotic[size_t(d)];

  double total = 0;
  for (const double& c : f.asymptotic) total += c * c;

  for (int oi = 0; oi <= spec.max_order; ++oi)
    for (int oj = 0; oi + oj <= spec.max_order; ++oj) {
      std::vector<double> u = base;
      for (int r = 0; r < oi; ++r) u = deriv_s(u, f.ns, f.nt, f.dim, f.ds);
      for (int r = 0; r < oj; ++r) u = deriv_t(u, f.ns, f.nt, f.dim);
      double integral = 0;
      for (int i = 0; i < f.ns; ++i) {
        double w = (i == 0 || i == f.ns - 1) ? 0.5 : 1.0;
        double s = f.s0 + i * f.ds;
        double weight = std::exp(2 * delta * std::fabs(s));
        double row = 0;
        for (int j = 0; j < f.nt; ++j)
          for (int d = 0; d < f.dim; ++d) {
            double x = u[size_t((i * f.nt + j) * f.dim + d)];
            row += x * x;
          }
        integral += w * weight * row;
      }
      total += integral * f.ds / f.nt;
    }
  return total;
}

double weighted_norm(const CylinderField& f, const WeightedNormSpec& spec) {
  return std::sqrt(weighted_norm_sq(f, spec));
}

std::vector<CounterexampleRow> continuity_counterexample(int n_max, double delta0,
                                                         std::vector<double> v) {
  if (n_max < 1 || n_max > 200)
    throw CylinderError("counterexample: n_max must lie in [1, 200]");
  if (!(delta0 > 0 && delta0 < kTwoPi))
    throw CylinderError("counterexample: delta0 outside (0, 2pi)");
  double v2 = 0;
  for (double x : v) v2 += x * x;
  if (v2 == 0) throw CylinderError("counterexample: v must be nonzero");

  const CutoffFunction& beta = cutoff();
  const int dim = int(v.size());
  const int ns = 1537, nt = 8;
  const double half_span = 1.5;
  const double ds = 2 * half_span / (ns - 1);
  WeightedNormSpec spec;
  spec.delta = {delta0};
  spec.max_order = 2;

  auto gamma_field = [&](double center, double scale) {
    return CylinderField::sample(
        center - half_span, ds, ns, nt, dim,
        [&](double s, double) {
          double g = plateau_cutoff(beta, s - center) * scale;
          std::vector<double> out(size_t(dim), 0.0);
          for (int d = 0; d < dim; ++d) out[size_t(d)] = g * v[size_t(d)];
          return out;
        },
        std::vector<double>(size_t(dim), 0.0));
  };

  // Normalize gamma to unit weighted norm.
  double I = weighted_norm_sq(gamma_field(0.0, 1.0), spec);
  double scale0 = 1.0 / std::sqrt(I);
  double vn2 = v2 * scale0 * scale0;  // |v|^2 after normalization

  GluingProfile exp = GluingProfile::exp_profile();
  const double R_floor = std::exp(1.0 / 0.45) - std::exp(1.0);

  std::vector<CounterexampleRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    double R = std::max(std::log(4.0 * n / vn2) / (2 * delta0), R_floor);
    double log_r = exp.logr_from_logR(std::log(R));
    double r = std::exp(log_r);
    double xi_scale = scale0 / std::sqrt(double(n));

    double source_sq = r * r + 1.0 / n;  // unit-normalized gamma: |xi_n|^2 = 1/n

    // Glued image: beta(s - R/2) vanishes on the support s in [R-1, R+1]
    // (R >= 6.5), so the glued field is xi_n shifted to the far end, measured
    // with the one-sided weight e^{2 delta s}.
    CylinderField glued = gamma_field(R, xi_scale);
    double target_sq = weighted_norm_sq(glued, spec);

    rows.push_back({n, log_r, std::sqrt(source_sq), std::sqrt(target_sq)});
  }
  return rows;
}

}  // namespace gw
