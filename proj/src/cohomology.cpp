#include "gw/cohomology.hpp"

namespace gw {

CohomologyRing::CohomologyRing(std::string name, std::vector<BasisClass> basis,
                               std::vector<std::vector<ClassVec>> cup,
                               std::vector<Rational> integral, int dim2n,
                               size_t unit_index, size_t point_index, Rational omega_gen,
                               long c1_gen)
    : name_(std::move(name)),
      basis_(std::move(basis)),
      cup_(std::move(cup)),
      integral_(std::move(integral)),
      dim2n_(dim2n),
      unit_index_(unit_index),
      point_index_(point_index),
      omega_gen_(std::move(omega_gen)),
      c1_gen_(c1_gen) {
  size_t n = basis_.size();
  if (cup_.size() != n || integral_.size() != n)
    throw RingError("ring tables do not match the basis size");
  for (const auto& row : cup_) {
    if (row.size() != n) throw RingError("cup table is not square");
    for (const auto& v : row)
      if (v.size() != n) throw RingError("cup table entry has wrong length");
  }
  if (unit_index_ >= n || point_index_ >= n) throw RingError("bad unit/point index");
  curve_gen_pd_ = ClassVec(n, Rational(0));
  // Graded commutativity check: e_i cup e_j = (-1)^{deg_i deg_j} e_j cup e_i.
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      int s = (basis_[i].degree % 2 != 0 && basis_[j].degree % 2 != 0) ? -1 : 1;
      for (size_t k = 0; k < n; ++k)
        if (cup_[i][j][k] != Rational(s) * cup_[j][i][k])
          throw RingError("cup table is not graded-commutative");
    }
}

ClassVec CohomologyRing::basis_class(size_t i) const {
  ClassVec v = zero_class();
  v.at(i) = 1;
  return v;
}

ClassVec CohomologyRing::cup(const ClassVec& a, const ClassVec& b) const {
  size_t n = rank();
  if (a.size() != n || b.size() != n) throw RingError("class vector has wrong length");
  ClassVec out = zero_class();
  for (size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      Rational c = a[i] * b[j];
      for (size_t k = 0; k < n; ++k) out[k] += c * cup_[i][j][k];
    }
  }
  return out;
}

ClassVec CohomologyRing::cup_all(const std::vector<ClassVec>& factors) const {
  ClassVec out = basis_class(unit_index_);
  for (const ClassVec& f : factors) out = cup(out, f);
  return out;
}

Rational CohomologyRing::integrate(const ClassVec& a) const {
  Rational s = 0;
  for (size_t i = 0; i < rank(); ++i) s += a[i] * integral_[i];
  return s;
}

Rational CohomologyRing::pairing(size_t i, size_t j) const {
  return integrate(cup_basis(i, j));
}

std::vector<std::vector<Rational>> CohomologyRing::pairing_matrix() const {
  size_t n = rank();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i][j] = pairing(i, j);
  return m;
}

int CohomologyRing::degree_of(const ClassVec& a) const {
  int deg = -1;
  for (size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    if (deg == -1)
      deg = basis_[i].degree;
    else if (deg != basis_[i].degree)
      throw RingError("class is not homogeneous");
  }
  return deg == -1 ? 0 : deg;
}

CohomologyRing CohomologyRing::point_ring() {
  std::vector<BasisClass> basis = {{"1", 0}};
  std::vector<std::vector<ClassVec>> cup = {{{Rational(1)}}};
  std::vector<Rational> integral = {Rational(1)};
  return CohomologyRing("point", basis, cup, integral, 0, 0, 0, Rational(0), 0);
}

CohomologyRing CohomologyRing::cp1_ring() {
  // Basis 1, H (the point class on CP^1); H^2 = 0.
  std::vector<BasisClass> basis = {{"1", 0}, {"H", 2}};
  auto e = [](int a, int b) { return ClassVec{Rational(a), Rational(b)}; };
  std::vector<std::vector<ClassVec>> cup = {{e(1, 0), e(0, 1)}, {e(0, 1), e(0, 0)}};
  std::vector<Rational> integral = {Rational(0), Rational(1)};
  CohomologyRing r("CP1", basis, cup, integral, 2, 0, 1, Rational(1), 2);
  r.set_curve_gen_pd(r.basis_class(0));  // PD([CP^1]) = 1
  return r;
}

CohomologyRing CohomologyRing::cp2_ring() {
  // Basis 1, H, H^2; H^3 = 0.
  std::vector<BasisClass> basis = {{"1", 0}, {"H", 2}, {"H^2", 4}};
  auto e = [](int a, int b, int c) {
    return ClassVec{Rational(a), Rational(b), Rational(c)};
  };
  std::vector<std::vector<ClassVec>> cup = {
      {e(1, 0, 0), e(0, 1, 0), e(0, 0, 1)},
      {e(0, 1, 0), e(0, 0, 1), e(0, 0, 0)},
      {e(0, 0, 1), e(0, 0, 0), e(0, 0, 0)}};
  std::vector<Rational> integral = {Rational(0), Rational(0), Rational(1)};
  CohomologyRing r("CP2", basis, cup, integral, 4, 0, 2, Rational(1), 3);
  r.set_curve_gen_pd(r.basis_class(1));  // PD(line) = H
  return r;
}

CohomologyRing CohomologyRing::torus_ring() {
  // 1, a, b odd; w = a cup b the top class.
  std::vector<BasisClass> basis = {{"1", 0}, {"a", 1}, {"b", 1}, {"w", 2}};
  auto e = [](int p, int q, int r, int s) {
    return ClassVec{Rational(p), Rational(q), Rational(r), Rational(s)};
  };
  ClassVec z = e(0, 0, 0, 0);
  std::vector<std::vector<ClassVec>> cup = {
      {e(1, 0, 0, 0), e(0, 1, 0, 0), e(0, 0, 1, 0), e(0, 0, 0, 1)},
      {e(0, 1, 0, 0), z, e(0, 0, 0, 1), z},
      {e(0, 0, 1, 0), e(0, 0, 0, -1), z, z},
      {e(0, 0, 0, 1), z, z, z}};
  std::vector<Rational> integral = {Rational(0), Rational(0), Rational(0), Rational(1)};
  CohomologyRing r("torus", basis, cup, integral, 2, 0, 3, Rational(1), 0);
  r.set_curve_gen_pd(r.basis_class(0));
  return r;
}

CohomologyRing CohomologyRing::kunneth_product(const CohomologyRing& a,
                                               const CohomologyRing& b) {
  size_t na = a.rank(), nb = b.rank(), n = na * nb;
  auto flat = [nb](size_t i, size_t j) { return i * nb + j; };
  std::vector<BasisClass> basis(n);
  std::vector<Rational> integral(n, Rational(0));
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < nb; ++j) {
      basis[flat(i, j)] = {a.basis(i).name + "*" + b.basis(j).name,
                           a.basis(i).degree + b.basis(j).degree};
      integral[flat(i, j)] =
          a.integrate(a.basis_class(i)) * b.integrate(b.basis_class(j));
    }
  std::vector<std::vector<ClassVec>> cup(
      n, std::vector<ClassVec>(n, ClassVec(n, Rational(0))));
  for (size_t i1 = 0; i1 < na; ++i1)
    for (size_t j1 = 0; j1 < nb; ++j1)
      for (size_t i2 = 0; i2 < na; ++i2)
        for (size_t j2 = 0; j2 < nb; ++j2) {
          // (x1 (x) y1)(x2 (x) y2) = (-1)^{deg y1 deg x2} x1x2 (x) y1y2
          int s = (b.basis(j1).degree % 2 != 0 && a.basis(i2).degree % 2 != 0) ? -1 : 1;
          const ClassVec& ca = a.cup_basis(i1, i2);
          const ClassVec& cb = b.cup_basis(j1, j2);
          auto& out = cup[flat(i1, j1)][flat(i2, j2)];
          for (size_t p = 0; p < na; ++p) {
            if (ca[p] == 0) continue;
            for (size_t q = 0; q < nb; ++q) {
              if (cb[q] == 0) continue;
              out[flat(p, q)] += Rational(s) * ca[p] * cb[q];
            }
          }
        }
  CohomologyRing r(a.name() + "x" + b.name(), basis, cup, integral,
                   a.dim2n() + b.dim2n(), flat(a.unit_index(), b.unit_index()),
                   flat(a.point_index(), b.point_index()), a.omega_gen(), a.c1_gen());
  // Curve generator = (gen_a) x {pt_b}: PD = pd_a (x) pt_b.
  ClassVec pd(n, Rational(0));
  for (size_t i = 0; i < na; ++i) pd[flat(i, b.point_index())] = a.curve_gen_pd()[i];
  r.set_curve_gen_pd(std::move(pd));
  return r;
}

DiagonalDecomposition diagonal_decomposition(const CohomologyRing& ring) {
  size_t n = ring.rank();
  // Solve M * C = I over the rationals, where M is the pairing matrix; then
  // dual_nu = sum_j C[j][nu] e_j satisfies integral(e_mu cup dual_nu) = delta.
  std::vector<std::vector<Rational>> m = ring.pairing_matrix();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw RingError("pairing matrix is singular");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = m[col][col];
    for (size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  DiagonalDecomposition dec;
  for (size_t nu = 0; nu < n; ++nu) {
    DiagonalDecomposition::Term t;
    t.nu = nu;
    t.dual = ClassVec(n, Rational(0));
    for (size_t j = 0; j < n; ++j) t.dual[j] = inv[j][nu];
    t.sign = (ring.basis(nu).degree % 2 != 0) ? -1 : 1;
    dec.terms.push_back(std::move(t));
  }
  return dec;
}

bool verify_diagonal(const CohomologyRing& ring, const DiagonalDecomposition& dec) {
  size_t n = ring.rank();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      ClassVec alpha = ring.basis_class(i), beta = ring.basis_class(j);
      Rational lhs = 0;
      for (const auto& t : dec.terms)
        lhs += Rational(t.sign) * ring.integrate(ring.cup(alpha, ring.basis_class(t.nu))) *
               ring.integrate(ring.cup(t.dual, beta));
      if (lhs != ring.integrate(ring.cup(alpha, beta))) return false;
    }
  return true;
}

}  // namespace gw
