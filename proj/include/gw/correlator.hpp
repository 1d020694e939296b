#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gw/cohomology.hpp"
#include "gw/dmclass.hpp"

namespace gw {

// One correlator key GW_{A,g,k}(alpha_1..alpha_k; beta). Insertions are basis
// indices: index nu stands for the homology class whose Poincare dual is e_nu.
struct TableKey {
  long A = 0;
  int g = 0;
  int k = 0;
  std::vector<size_t> alphas;
  DMClass beta = DMClass::pt();

  // Lookup identity: the beta symbol is canonicalized against the ambient
  // moduli signature, so e.g. Fundamental(0,3) and Pt address the same cell.
  std::string canonical_id() const;
  std::string display() const;
};

// Exact-rational correlator table over a fixed ring. Distinguishes "absent"
// from "stored zero".
class CorrelatorTable {
 public:
  explicit CorrelatorTable(const CohomologyRing& ring) : ring_(&ring) {}

  const CohomologyRing& ring() const { return *ring_; }

  void set(const TableKey& key, const Rational& value);
  std::optional<Rational> lookup(const TableKey& key) const;
  size_t size() const { return entries_.size(); }

  struct Entry {
    TableKey key;  // stored (un-canonicalized) form
    Rational value;
  };
  const std::map<std::string, Entry>& entries() const { return entries_; }

  // Value of GW(.., class-vector insertion at position pos, ..): expands the
  // vector in the basis and sums lookups; nullopt when any needed entry is
  // absent.
  std::optional<Rational> lookup_linear(TableKey key, size_t pos,
                                        const ClassVec& cls) const;

  nlohmann::ordered_json to_json() const;
  static CorrelatorTable from_json(const nlohmann::json& j, const CohomologyRing& ring);

 private:
  const CohomologyRing* ring_;
  std::map<std::string, Entry> entries_;  // canonical id -> entry
};

struct Verdict {
  bool passed = true;
  int checked = 0;
  std::vector<std::string> violations;
  std::vector<std::string> untestable;
};

bool is_basic_class(long A, int g, int k);

// Koszul sign exponents. Degrees are the (co)homological parities of the
// inserted basis classes.
int symmetry_sign_exponent(const CohomologyRing& ring, const std::vector<size_t>& alphas,
                           const std::vector<int>& sigma);
int split_sign_exponent(const CohomologyRing& ring, const std::vector<size_t>& alphas,
                        const std::vector<int>& subset0);

// The eight axiom checkers. Each confirms its axiom on every entry in scope,
// reports violations, and lists keys whose required partners are absent as
// untestable (never as failures).
Verdict check_effective(const CorrelatorTable& table);
Verdict check_grading(const CorrelatorTable& table);
Verdict check_zero(const CorrelatorTable& table);
Verdict check_symmetry(const CorrelatorTable& table, const std::vector<int>& sigma);
Verdict check_fundamental_class(const CorrelatorTable& table);
Verdict check_divisor(const CorrelatorTable& table);
Verdict check_splitting(const CorrelatorTable& table, const DiagonalDecomposition& dec);
Verdict check_genus_reduction(const CorrelatorTable& table,
                              const DiagonalDecomposition& dec);

// Closed-form genus-zero evaluators used to build fixture tables. `nd` maps
// degree d >= 1 to the rational plane-curve count (CP^2) — absent degrees make
// the evaluator return nullopt.
std::optional<Rational> eval_cp1(const CohomologyRing& ring, long A, int k,
                                 const std::vector<size_t>& alphas);
std::optional<Rational> eval_cp2(const CohomologyRing& ring, long A, int k,
                                 const std::vector<size_t>& alphas,
                                 const std::map<long, Rational>& nd);

// Fixture tables: genus-zero correlators plus one exemplar entry for each
// pushforward/pullback class so every checker has something in scope.
CorrelatorTable cp1_fixture_table(const CohomologyRing& ring);
CorrelatorTable cp2_fixture_table(const CohomologyRing& ring,
                                  const std::map<long, Rational>& nd, long d_max,
                                  int k_max);
// Synthetic odd-degree fixture: zero-axiom values on the rank-4 odd ring,
// exercising every sign rule.
CorrelatorTable torus_fixture_table(const CohomologyRing& ring);

}  // namespace gw
