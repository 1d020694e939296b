#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gw/rational.hpp"

namespace gw {

struct RingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A cohomology class expressed in the ring's basis.
using ClassVec = std::vector<Rational>;

struct BasisClass {
  std::string name;
  int degree = 0;
};

// Graded basis with exact-rational cup products and the integration functional
// over the fundamental cycle. Degree labels for curve classes are integers A
// with omega(A) = A * omega_gen and c1(A) = A * c1_gen.
class CohomologyRing {
 public:
  CohomologyRing(std::string name, std::vector<BasisClass> basis,
                 std::vector<std::vector<ClassVec>> cup, std::vector<Rational> integral,
                 int dim2n, size_t unit_index, size_t point_index, Rational omega_gen,
                 long c1_gen);

  const std::string& name() const { return name_; }
  size_t rank() const { return basis_.size(); }
  const BasisClass& basis(size_t i) const { return basis_.at(i); }
  int dim2n() const { return dim2n_; }
  size_t unit_index() const { return unit_index_; }
  size_t point_index() const { return point_index_; }
  const Rational& omega_gen() const { return omega_gen_; }
  long c1_gen() const { return c1_gen_; }

  ClassVec zero_class() const { return ClassVec(rank(), Rational(0)); }
  ClassVec basis_class(size_t i) const;

  // Poincare dual of the H_2 generator; the divisor axiom's intersection
  // number is A * integral(e cup curve_gen_pd).
  const ClassVec& curve_gen_pd() const { return curve_gen_pd_; }
  void set_curve_gen_pd(ClassVec v) { curve_gen_pd_ = std::move(v); }

  ClassVec cup(const ClassVec& a, const ClassVec& b) const;
  ClassVec cup_all(const std::vector<ClassVec>& factors) const;
  // Cup of basis elements (exact table lookup).
  const ClassVec& cup_basis(size_t i, size_t j) const { return cup_[i][j]; }

  // Integration over [Q] (degree-2n component).
  Rational integrate(const ClassVec& a) const;
  // Poincare pairing <e_i cup e_j, [Q]>.
  Rational pairing(size_t i, size_t j) const;
  std::vector<std::vector<Rational>> pairing_matrix() const;

  // Homogeneous degree of a class (throws on mixed nonzero degrees).
  int degree_of(const ClassVec& a) const;
  int degree_of_basis(size_t i) const { return basis_[i].degree; }

  // Bundled toy targets.
  static CohomologyRing point_ring();
  static CohomologyRing cp1_ring();
  static CohomologyRing cp2_ring();
  // Synthetic odd-degree ring (rank 4: 1, a, b, w with a cup b = w = -b cup a):
  // exercises every sign rule.
  static CohomologyRing torus_ring();
  // Graded tensor product with Koszul signs; omega/c1 of the generator taken
  // from `a` (product degree labels stay rank 1, matching the table format).
  static CohomologyRing kunneth_product(const CohomologyRing& a, const CohomologyRing& b);

 private:
  std::string name_;
  std::vector<BasisClass> basis_;
  std::vector<std::vector<ClassVec>> cup_;  // cup_[i][j] = e_i cup e_j
  std::vector<Rational> integral_;          // integral of e_i over [Q]
  int dim2n_;
  size_t unit_index_, point_index_;
  Rational omega_gen_;
  long c1_gen_;
  ClassVec curve_gen_pd_;
};

// PD of the diagonal: sum_nu sign_nu * e_nu (x) dual_nu with
// sum_nu sign_nu * integral(alpha cup e_nu) * integral(dual_nu cup beta)
// = integral(alpha cup beta) for all alpha, beta.
struct DiagonalDecomposition {
  struct Term {
    size_t nu;      // basis index of the first factor
    ClassVec dual;  // e^nu as a class vector
    int sign;       // (-1)^{deg e_nu}
  };
  std::vector<Term> terms;
};

// Invert the pairing matrix over exact rationals; throws RingError if the
// pairing is singular.
DiagonalDecomposition diagonal_decomposition(const CohomologyRing& ring);

// Exhaustive exact verification over all basis pairs.
bool verify_diagonal(const CohomologyRing& ring, const DiagonalDecomposition& dec);

}  // namespace gw
