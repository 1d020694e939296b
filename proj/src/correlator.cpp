#include "gw/correlator.hpp"

#include <functional>
#include <sstream>

namespace gw {

namespace {

std::string key_string(long A, int g, int k, const std::vector<size_t>& alphas,
                       const std::string& beta) {
  std::ostringstream os;
  os << "A=" << A << "|g=" << g << "|k=" << k << "|a=";
  for (size_t i = 0; i < alphas.size(); ++i) os << (i ? "," : "") << alphas[i];
  os << "|b=" << beta;
  return os.str();
}

}  // namespace

std::string TableKey::canonical_id() const {
  return key_string(A, g, k, alphas, beta.canonical(g, k).to_string());
}

std::string TableKey::display() const {
  return key_string(A, g, k, alphas, beta.to_string());
}

void CorrelatorTable::set(const TableKey& key, const Rational& value) {
  if (key.alphas.size() != size_t(key.k))
    throw RingError("table key: insertion count does not match k");
  for (size_t a : key.alphas)
    if (a >= ring_->rank()) throw RingError("table key: insertion index out of range");
  entries_[key.canonical_id()] = Entry{key, value};
}

std::optional<Rational> CorrelatorTable::lookup(const TableKey& key) const {
  auto it = entries_.find(key.canonical_id());
  if (it == entries_.end()) return std::nullopt;
  return it->second.value;
}

std::optional<Rational> CorrelatorTable::lookup_linear(TableKey key, size_t pos,
                                                       const ClassVec& cls) const {
  Rational sum = 0;
  for (size_t i = 0; i < cls.size(); ++i) {
    if (cls[i] == 0) continue;
    key.alphas.at(pos) = i;
    std::optional<Rational> v = lookup(key);
    if (!v) return std::nullopt;
    sum += cls[i] * *v;
  }
  return sum;
}

nlohmann::ordered_json CorrelatorTable::to_json() const {
  nlohmann::ordered_json j;
  j["ring_ref"] = ring_->name();
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& [id, e] : entries_) {
    nlohmann::ordered_json ej;
    ej["A"] = e.key.A;
    ej["g"] = e.key.g;
    ej["k"] = e.key.k;
    ej["alphas"] = e.key.alphas;
    ej["beta"] = e.key.beta.to_json();
    ej["value"] = format_rational(e.value);
    j["entries"].push_back(std::move(ej));
  }
  return j;
}

CorrelatorTable CorrelatorTable::from_json(const nlohmann::json& j,
                                           const CohomologyRing& ring) {
  if (j.at("ring_ref").get<std::string>() != ring.name())
    throw RingError("table refers to ring '" + j.at("ring_ref").get<std::string>() +
                    "', got '" + ring.name() + "'");
  CorrelatorTable t(ring);
  for (const auto& ej : j.at("entries")) {
    TableKey key;
    key.A = ej.at("A").get<long>();
    key.g = ej.at("g").get<int>();
    key.k = ej.at("k").get<int>();
    key.alphas = ej.at("alphas").get<std::vector<size_t>>();
    key.beta = DMClass::from_json(ej.at("beta"));
    t.set(key, parse_rational(ej.at("value").get<std::string>()));
  }
  return t;
}

bool is_basic_class(long, int g, int k) {
  return (g == 0 && k == 3) || (g == 1 && k == 1) || (g >= 2 && k == 0);
}

int symmetry_sign_exponent(const CohomologyRing& ring, const std::vector<size_t>& alphas,
                           const std::vector<int>& sigma) {
  int n = 0;
  int k = int(sigma.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (sigma[size_t(i)] <= sigma[size_t(j)]) continue;
      size_t a = alphas.at(size_t(sigma[size_t(i)] - 1));
      size_t b = alphas.at(size_t(sigma[size_t(j)] - 1));
      if (ring.degree_of_basis(a) % 2 != 0 && ring.degree_of_basis(b) % 2 != 0) ++n;
    }
  return n;
}

int split_sign_exponent(const CohomologyRing& ring, const std::vector<size_t>& alphas,
                        const std::vector<int>& subset0) {
  // Reordering 1..k into (S0 ascending, S1 ascending): the inversions are the
  // pairs i < j with i outside S0 and j inside it.
  std::vector<bool> in0(alphas.size() + 1, false);
  for (int s : subset0) in0.at(size_t(s)) = true;
  int n = 0;
  for (size_t i = 1; i <= alphas.size(); ++i)
    for (size_t j = i + 1; j <= alphas.size(); ++j) {
      if (in0[i] || !in0[j]) continue;
      if (ring.degree_of_basis(alphas[i - 1]) % 2 != 0 &&
          ring.degree_of_basis(alphas[j - 1]) % 2 != 0)
        ++n;
    }
  return n;
}

namespace {

void fail(Verdict& v, const std::string& msg) {
  v.passed = false;
  v.violations.push_back(msg);
}

}  // namespace

Verdict check_effective(const CorrelatorTable& table) {
  Verdict v;
  for (const auto& [id, e] : table.entries()) {
    ++v.checked;
    Rational omega = Rational(e.key.A) * table.ring().omega_gen();
    if (omega < 0 && e.value != 0)
      fail(v, "nonzero correlator with negative area: " + e.key.display());
  }
  return v;
}

Verdict check_grading(const CorrelatorTable& table) {
  Verdict v;
  const CohomologyRing& ring = table.ring();
  for (const auto& [id, e] : table.entries()) {
    if (e.value == 0) continue;
    ++v.checked;
    const TableKey& k = e.key;
    long lhs = 0;
    for (size_t a : k.alphas) lhs += ring.degree_of_basis(a);
    DMClass bc = k.beta.canonical(k.g, k.k);
    lhs += 6 * k.g - 6 + 2 * k.k - bc.degree();
    long rhs = 2 * k.A * ring.c1_gen() + (ring.dim2n() - 6) * (1 - k.g) + 2 * k.k;
    if (lhs != rhs)
      fail(v, "graded degree mismatch (" + std::to_string(lhs) + " vs " +
                  std::to_string(rhs) + "): " + k.display());
  }
  return v;
}

Verdict check_zero(const CorrelatorTable& table) {
  Verdict v;
  const CohomologyRing& ring = table.ring();
  for (const auto& [id, e] : table.entries()) {
    const TableKey& k = e.key;
    if (k.A != 0 || k.g != 0) continue;
    DMClass bc = k.beta.canonical(k.g, k.k);
    if (bc.kind() == DMClass::Kind::Pt) {
      ++v.checked;
      std::vector<ClassVec> factors;
      for (size_t a : k.alphas) factors.push_back(ring.basis_class(a));
      Rational expect = ring.integrate(ring.cup_all(factors));
      if (e.value != expect)
        fail(v, "A=0 point-class correlator differs from the cup integral (" +
                    format_rational(e.value) + " vs " + format_rational(expect) +
                    "): " + k.display());
    } else if (bc.degree() > 0) {
      ++v.checked;
      if (e.value != 0)
        fail(v, "A=0 correlator against positive-degree class is nonzero: " +
                    k.display());
    }
  }
  return v;
}

Verdict check_symmetry(const CorrelatorTable& table, const std::vector<int>& sigma) {
  Verdict v;
  const CohomologyRing& ring = table.ring();
  for (const auto& [id, e] : table.entries()) {
    const TableKey& k = e.key;
    if (size_t(k.k) != sigma.size()) continue;
    DMClass bc = k.beta.canonical(k.g, k.k);
    // sigma_* acts trivially on the point and fundamental classes; other
    // symbols have no computable pushforward here.
    if (bc.kind() != DMClass::Kind::Pt && bc.kind() != DMClass::Kind::Fundamental) {
      v.untestable.push_back("sigma_* not computable for " + k.display());
      continue;
    }
    TableKey pk = k;
    for (int i = 1; i <= k.k; ++i)
      pk.alphas[size_t(i - 1)] = k.alphas.at(size_t(sigma[size_t(i - 1)] - 1));
    std::optional<Rational> pv = table.lookup(pk);
    if (!pv) {
      v.untestable.push_back("permuted entry absent for " + k.display());
      continue;
    }
    ++v.checked;
    int n = symmetry_sign_exponent(ring, k.alphas, sigma);
    Rational expect = (n % 2 == 0) ? e.value : -e.value;
    if (*pv != expect)
      fail(v, "symmetry sign violated (got " + format_rational(*pv) + ", want " +
                  format_rational(expect) + "): " + k.display());
  }
  return v;
}

Verdict check_fundamental_class(const CorrelatorTable& table) {
  Verdict v;
  const CohomologyRing& ring = table.ring();
  for (const auto& [id, e] : table.entries()) {
    const TableKey& k = e.key;
    DMClass bc = k.beta.canonical(k.g, k.k);
    if (bc.kind() == DMClass::Kind::Fundamental && k.k >= 1 &&
        k.alphas.back() == ring.unit_index() && k.A != 0 &&
        !is_basic_class(k.A, k.g, k.k)) {
      ++v.checked;
      if (e.value != 0)
        fail(v, "unconstrained-point correlator is nonzero: " + k.display());
    }
    if (k.beta.kind() == DMClass::Kind::Section) {
      if (k.k < 1 || k.alphas.back() != ring.unit_index()) {
        v.untestable.push_back("section entry without trailing [Q]: " + k.display());
        continue;
      }
      TableKey rk;
      rk.A = k.A;
      rk.g = k.g;
      rk.k = k.k - 1;
      rk.alphas.assign(k.alphas.begin(), k.alphas.end() - 1);
      rk.beta = k.beta.child(0);
      std::optional<Rational> rv = table.lookup(rk);
      if (!rv) {
        v.untestable.push_back("reduced entry absent for " + k.display());
        continue;
      }
      ++v.checked;
      if (e.value != *rv)
        fail(v, "section pushforward does not reduce (" + format_rational(e.value) +
                    " vs " + format_rational(*rv) + "): " + k.display());
    }
  }
  return v;
}

Verdict check_divisor(const CorrelatorTable& table) {
  Verdict v;
  const CohomologyRing& ring = table.ring();
  for (const auto& [id, e] : table.entries()) {
    const TableKey& k = e.key;
    if (k.beta.kind() != DMClass::Kind::FtPullbackPD) continue;
    if (is_basic_class(k.A, k.g, k.k)) continue;
    if (k.k < 1 || ring.degree_of_basis(k.alphas.back()) != 2) {
      v.untestable.push_back("pullback entry without divisor insertion: " + k.display());
      continue;
    }
    Rational factor =
        Rational(k.A) *
        ring.integrate(ring.cup(ring.basis_class(k.alphas.back()), ring.curve_gen_pd()));
    TableKey rk;
    rk.A = k.A;
    rk.g = k.g;
    rk.k = k.k - 1;
    rk.alphas.assign(k.alphas.begin(), k.alphas.end() - 1);
    rk.beta = k.beta.child(0);
    std::optional<Rational> rv = table.lookup(rk);
    if (!rv) {
      v.untestable.push_back("reduced entry absent for " + k.display());
      continue;
    }
    ++v.checked;
    if (e.value != factor * *rv)
      fail(v, "intersection factor violated (got " + format_rational(e.value) +
                  ", want " + format_rational(factor * *rv) + "): " + k.display());
  }
  return v;
}

namespace {

// Genus carried by a split branch symbol: Fundamental declares it, the point
// class means a three-pointed genus-zero space; anything else is opaque.
std::optional<int> branch_genus(const DMClass& b) {
  if (b.kind() == DMClass::Kind::Fundamental) return b.g();
  if (b.kind() == DMClass::Kind::Pt) return 0;
  return std::nullopt;
}

}  // namespace

Verdict check_splitting(const CorrelatorTable& table, const DiagonalDecomposition& dec) {
  Verdict v;
  const CohomologyRing& ring = table.ring();
  for (const auto& [id, e] : table.entries()) {
    const TableKey& k = e.key;
    if (k.beta.kind() != DMClass::Kind::Split) continue;
    const std::vector<int>& s0 = k.beta.subset();
    std::vector<int> s1;
    {
      std::vector<bool> in0(size_t(k.k) + 1, false);
      for (int s : s0) in0.at(size_t(s)) = true;
      for (int i = 1; i <= k.k; ++i)
        if (!in0[size_t(i)]) s1.push_back(i);
    }
    std::optional<int> g0 = branch_genus(k.beta.child(0));
    std::optional<int> g1 = branch_genus(k.beta.child(1));
    if (!g0 || !g1 || *g0 + *g1 != k.g || k.A < 0) {
      v.untestable.push_back("branch genera not determined for " + k.display());
      continue;
    }
    bool missing = false;
    Rational rhs = 0;
    for (long A0 = 0; A0 <= k.A && !missing; ++A0) {
      for (const auto& t : dec.terms) {
        TableKey k0;
        k0.A = A0;
        k0.g = *g0;
        k0.k = int(s0.size()) + 1;
        for (int i : s0) k0.alphas.push_back(k.alphas.at(size_t(i - 1)));
        k0.alphas.push_back(t.nu);
        k0.beta = k.beta.child(0);
        std::optional<Rational> v0 = table.lookup(k0);
        if (!v0) {
          missing = true;
          break;
        }
        if (*v0 == 0) continue;
        TableKey k1;
        k1.A = k.A - A0;
        k1.g = *g1;
        k1.k = int(s1.size()) + 1;
        k1.alphas.push_back(0);  // placeholder for the diagonal partner
        for (int i : s1) k1.alphas.push_back(k.alphas.at(size_t(i - 1)));
        k1.beta = k.beta.child(1);
        std::optional<Rational> v1 = table.lookup_linear(k1, 0, t.dual);
        if (!v1) {
          missing = true;
          break;
        }
        rhs += Rational(t.sign) * *v0 * *v1;
      }
    }
    if (missing) {
      v.untestable.push_back("factor entries absent for " + k.display());
      continue;
    }
    ++v.checked;
    int n = split_sign_exponent(ring, k.alphas, s0);
    Rational expect = (n % 2 == 0) ? rhs : -rhs;
    if (e.value != expect)
      fail(v, "splitting identity violated (got " + format_rational(e.value) +
                  ", want " + format_rational(expect) + "): " + k.display());
  }
  return v;
}

Verdict check_genus_reduction(const CorrelatorTable& table,
                              const DiagonalDecomposition& dec) {
  Verdict v;
  for (const auto& [id, e] : table.entries()) {
    const TableKey& k = e.key;
    if (k.beta.kind() != DMClass::Kind::GenusReduce) continue;
    if (k.g < 1) {
      v.untestable.push_back("genus-reduction entry at genus 0: " + k.display());
      continue;
    }
    bool missing = false;
    Rational rhs = 0;
    for (const auto& t : dec.terms) {
      TableKey rk;
      rk.A = k.A;
      rk.g = k.g - 1;
      rk.k = k.k + 2;
      rk.alphas = k.alphas;
      rk.alphas.push_back(t.nu);
      rk.alphas.push_back(0);  // placeholder for the dual partner
      rk.beta = k.beta.child(0);
      std::optional<Rational> rv =
          table.lookup_linear(rk, rk.alphas.size() - 1, t.dual);
      if (!rv) {
        missing = true;
        break;
      }
      rhs += Rational(t.sign) * *rv;
    }
    if (missing) {
      v.untestable.push_back("lower-genus entries absent for " + k.display());
      continue;
    }
    ++v.checked;
    if (Rational(2) * e.value != rhs)
      fail(v, "genus-reduction factor violated (2*" + format_rational(e.value) +
                  " vs " + format_rational(rhs) + "): " + k.display());
  }
  return v;
}

std::optional<Rational> eval_cp1(const CohomologyRing& ring, long A, int k,
                                 const std::vector<size_t>& alphas) {
  if (A < 0) return Rational(0);
  long h = 0, u = 0;
  for (size_t a : alphas) (ring.degree_of_basis(a) == 0 ? u : h) += 1;
  if (A == 0) {
    if (k != 3) return Rational(0);  // positive-degree fundamental class
    std::vector<ClassVec> f;
    for (size_t a : alphas) f.push_back(ring.basis_class(a));
    return ring.integrate(ring.cup_all(f));
  }
  if (u > 0) return Rational(0);
  // Graded balance: #H = 2A + k - 2, only A = 1 fits inside k insertions.
  if (A == 1 && h == k) return Rational(1);
  return Rational(0);
}

std::optional<Rational> eval_cp2(const CohomologyRing& ring, long A, int k,
                                 const std::vector<size_t>& alphas,
                                 const std::map<long, Rational>& nd) {
  if (A < 0) return Rational(0);
  long u = 0, h = 0, p = 0;
  for (size_t a : alphas) {
    int d = ring.degree_of_basis(a);
    (d == 0 ? u : (d == 2 ? h : p)) += 1;
  }
  if (A == 0) {
    if (k != 3) return Rational(0);
    std::vector<ClassVec> f;
    for (size_t a : alphas) f.push_back(ring.basis_class(a));
    return ring.integrate(ring.cup_all(f));
  }
  if (u > 0) return Rational(0);
  if (p != 3 * A - 1) return Rational(0);  // graded balance: #pt = 3d-1
  auto it = nd.find(A);
  if (it == nd.end()) return std::nullopt;
  Rational val = it->second;
  for (long i = 0; i < h; ++i) val *= Rational(A);  // divisor factor d^{#H}
  return val;
}

namespace {

// All k-tuples over the basis indices {0..rank-1}.
void for_each_tuple(size_t rank, int k, const std::function<void(std::vector<size_t>&)>& fn) {
  std::vector<size_t> t(size_t(k), 0);
  while (true) {
    fn(t);
    int i = k - 1;
    while (i >= 0 && t[size_t(i)] == rank - 1) {
      t[size_t(i)] = 0;
      --i;
    }
    if (i < 0) return;
    ++t[size_t(i)];
  }
}

Rational split_rhs_cp2(const CohomologyRing& ring, const DiagonalDecomposition& dec,
                       long A, const std::vector<size_t>& alphas,
                       const std::vector<int>& s0, const std::map<long, Rational>& nd) {
  std::vector<int> s1;
  std::vector<bool> in0(alphas.size() + 1, false);
  for (int s : s0) in0.at(size_t(s)) = true;
  for (size_t i = 1; i <= alphas.size(); ++i)
    if (!in0[i]) s1.push_back(int(i));
  Rational rhs = 0;
  for (long A0 = 0; A0 <= A; ++A0)
    for (const auto& t : dec.terms) {
      std::vector<size_t> a0;
      for (int i : s0) a0.push_back(alphas[size_t(i - 1)]);
      a0.push_back(t.nu);
      Rational v0 = *eval_cp2(ring, A0, int(a0.size()), a0, nd);
      if (v0 == 0) continue;
      Rational sum1 = 0;
      for (size_t mu = 0; mu < ring.rank(); ++mu) {
        if (t.dual[mu] == 0) continue;
        std::vector<size_t> a1{mu};
        for (int i : s1) a1.push_back(alphas[size_t(i - 1)]);
        sum1 += t.dual[mu] * *eval_cp2(ring, A - A0, int(a1.size()), a1, nd);
      }
      rhs += Rational(t.sign) * v0 * sum1;
    }
  return rhs;
}

}  // namespace

CorrelatorTable cp1_fixture_table(const CohomologyRing& ring) {
  CorrelatorTable t(ring);
  for (long A = 0; A <= 2; ++A)
    for (int k = 3; k <= 5; ++k)
      for_each_tuple(ring.rank(), k, [&](std::vector<size_t>& alphas) {
        TableKey key{A, 0, k, alphas, DMClass::fundamental(0, k)};
        t.set(key, *eval_cp1(ring, A, k, alphas));
      });
  const size_t U = ring.unit_index(), H = ring.point_index();
  // s_1 pushforward exemplar.
  t.set({1, 0, 4, {H, H, H, U}, DMClass::section(1, DMClass::fundamental(0, 3))},
        Rational(1));
  // ft pullback exemplar: (A.H) = 1 times the three-point count.
  t.set({1, 0, 4, {H, H, H, H}, DMClass::ft_pullback_pd(DMClass::fundamental(0, 3))},
        Rational(1));
  // Boundary class exemplar: expansion over the two-element diagonal basis.
  t.set({1, 0, 4, {H, H, H, U},
         DMClass::split({1, 2}, DMClass::fundamental(0, 3), DMClass::fundamental(0, 3))},
        Rational(1));
  // Genus-one bridge: both sides of the genus-reduction identity vanish.
  t.set({1, 1, 3, {H, H, H}, DMClass::genus_reduce(DMClass::fundamental(0, 5))},
        Rational(0));
  return t;
}

CorrelatorTable cp2_fixture_table(const CohomologyRing& ring,
                                  const std::map<long, Rational>& nd, long d_max,
                                  int k_max) {
  CorrelatorTable t(ring);
  for (long A = 0; A <= d_max; ++A)
    for (int k = 3; k <= k_max; ++k)
      for_each_tuple(ring.rank(), k, [&](std::vector<size_t>& alphas) {
        std::optional<Rational> v = eval_cp2(ring, A, k, alphas, nd);
        if (!v) return;
        TableKey key{A, 0, k, alphas, DMClass::fundamental(0, k)};
        t.set(key, *v);
      });
  const size_t U = ring.unit_index(), H = 1, P = ring.point_index();
  DiagonalDecomposition dec = diagonal_decomposition(ring);
  // s_1 pushforward exemplar.
  t.set({1, 0, 4, {P, P, H, U}, DMClass::section(1, DMClass::fundamental(0, 3))},
        *eval_cp2(ring, 1, 3, {P, P, H}, nd));
  // ft pullback exemplar: (A.H) = 1 line through two points.
  t.set({1, 0, 4, {P, P, H, H}, DMClass::ft_pullback_pd(DMClass::fundamental(0, 3))},
        *eval_cp2(ring, 1, 3, {P, P, H}, nd));
  // Boundary classes: values are the diagonal-expanded right-hand sides.
  {
    std::vector<size_t> al{H, H, P, P};
    t.set({1, 0, 4, al,
           DMClass::split({1, 2}, DMClass::fundamental(0, 3), DMClass::fundamental(0, 3))},
          split_rhs_cp2(ring, dec, 1, al, {1, 2}, nd));
  }
  if (k_max >= 5) {
    std::vector<size_t> al{P, P, H, H, U};
    t.set({1, 0, 5, al,
           DMClass::split({1, 2, 3}, DMClass::fundamental(0, 4),
                          DMClass::fundamental(0, 3))},
          split_rhs_cp2(ring, dec, 1, al, {1, 2, 3}, nd));
    // Genus-reduction exemplar: half the diagonal-summed genus-zero value.
    Rational rhs = 0;
    for (const auto& term : dec.terms)
      for (size_t mu = 0; mu < ring.rank(); ++mu) {
        if (term.dual[mu] == 0) continue;
        rhs += Rational(term.sign) * term.dual[mu] *
               *eval_cp2(ring, 1, 5, {P, P, H, term.nu, mu}, nd);
      }
    t.set({1, 1, 3, {P, P, H}, DMClass::genus_reduce(DMClass::fundamental(0, 5))},
          rhs / Rational(2));
  }
  return t;
}

CorrelatorTable torus_fixture_table(const CohomologyRing& ring) {
  CorrelatorTable t(ring);
  for (int k = 3; k <= 4; ++k)
    for_each_tuple(ring.rank(), k, [&](std::vector<size_t>& alphas) {
      std::vector<ClassVec> f;
      for (size_t a : alphas) f.push_back(ring.basis_class(a));
      TableKey key{0, 0, k, alphas, DMClass::pt()};
      t.set(key, ring.integrate(ring.cup_all(f)));
    });
  return t;
}

}  // namespace gw
