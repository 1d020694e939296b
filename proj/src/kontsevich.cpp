#include "gw/kontsevich.hpp"

#include <stdexcept>
#include <tuple>

#include "gw/cohomology.hpp"
#include "gw/correlator.hpp"

namespace gw {

std::map<long, Rational> kontsevich(long d_max) {
  if (d_max < 1 || d_max > 12)
    throw std::invalid_argument("kontsevich: d_max must lie in [1, 12]");
  std::map<long, Rational> n;
  n[1] = 1;
  for (long d = 2; d <= d_max; ++d) {
    Rational sum = 0;
    for (long d1 = 1; d1 < d; ++d1) {
      long d2 = d - d1;
      Rational coeff = Rational(d1 * d1 * d2 * d2) * Rational(binomial(3 * d - 4, 3 * d1 - 2)) -
                       Rational(d1 * d1 * d1 * d2) * Rational(binomial(3 * d - 4, 3 * d1 - 1));
      sum += n[d1] * n[d2] * coeff;
    }
    n[d] = sum;
  }
  return n;
}

namespace {

// CP^2 genus-zero correlator against the fundamental class, by insertion
// counts only (u units, h lines, p points). nd[A] holds the degree-A count.
Rational evalc(long A, long u, long h, long p, const std::vector<Rational>& nd) {
  if (A < 0) return Rational(0);
  if (A == 0) {
    if (u + h + p != 3) return Rational(0);  // only the three-point space
    return (h + 2 * p == 2) ? Rational(1) : Rational(0);
  }
  if (u > 0) return Rational(0);
  if (p != 3 * A - 1) return Rational(0);
  Rational v = nd[size_t(A)];
  for (long i = 0; i < h; ++i) v *= Rational(A);
  return v;
}

// Diagonal term: first-factor type, second-factor type, coefficient.
// Types encode the basis class: 0 = unit, 1 = H, 2 = point.
using DiagTerm = std::tuple<int, int, Rational>;

std::vector<DiagTerm> cp2_diagonal() {
  CohomologyRing ring = CohomologyRing::cp2_ring();
  DiagonalDecomposition dec = diagonal_decomposition(ring);
  std::vector<DiagTerm> out;
  for (const auto& t : dec.terms)
    for (size_t mu = 0; mu < ring.rank(); ++mu) {
      if (t.dual[mu] == 0) continue;
      out.emplace_back(int(t.nu), int(mu), Rational(t.sign) * t.dual[mu]);
    }
  return out;
}

// One side of the boundary relation: the distinguished labels contribute
// (h0d, p0d) to the first branch and (h1d, p1d) to the second; the 3d-4 free
// point labels are distributed binomially (they are interchangeable).
Rational side(long d, long h0d, long p0d, long h1d, long p1d,
              const std::vector<Rational>& nd, const std::vector<DiagTerm>& diag) {
  long nfree = 3 * d - 4;
  Rational total = 0;
  for (long m = 0; m <= nfree; ++m) {
    Rational weight = Rational(binomial(nfree, m));
    Rational sv = 0;
    for (long A0 = 0; A0 <= d; ++A0)
      for (const auto& [nu, mu, c] : diag) {
        Rational v0 = evalc(A0, nu == 0 ? 1 : 0, h0d + (nu == 1 ? 1 : 0),
                            p0d + m + (nu == 2 ? 1 : 0), nd);
        if (v0 == 0) continue;
        Rational v1 = evalc(d - A0, mu == 0 ? 1 : 0, h1d + (mu == 1 ? 1 : 0),
                            p1d + (nfree - m) + (mu == 2 ? 1 : 0), nd);
        sv += c * v0 * v1;
      }
    total += weight * sv;
  }
  return total;
}

}  // namespace

std::map<long, Rational> kontsevich_via_splitting(long d_max) {
  if (d_max < 1 || d_max > 6)
    throw std::invalid_argument("kontsevich_via_splitting: d_max must lie in [1, 6]");
  std::vector<DiagTerm> diag = cp2_diagonal();
  std::vector<Rational> nd(size_t(d_max) + 1, Rational(0));
  std::map<long, Rational> out;
  nd[1] = 1;  // one line through two points
  out[1] = 1;
  for (long d = 2; d <= d_max; ++d) {
    // Insertions H, H, pt x (3d-2); labels 1,2 carry H, labels 3,4 the
    // distinguished points. (12|34) and (13|24) give homologous boundary
    // classes; the splitting expansions must agree, which pins down N_d.
    auto diff = [&](const Rational& trial) {
      nd[size_t(d)] = trial;
      return side(d, 2, 0, 0, 2, nd, diag) - side(d, 1, 1, 1, 1, nd, diag);
    };
    Rational at0 = diff(Rational(0));
    Rational slope = diff(Rational(1)) - at0;
    if (slope == 0)
      throw std::logic_error("boundary relation degenerate at d = " + std::to_string(d));
    nd[size_t(d)] = -at0 / slope;
    out[d] = nd[size_t(d)];
  }
  return out;
}

}  // namespace gw
