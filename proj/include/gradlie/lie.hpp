#pragma once

// Graded Lie algebras given by structure constants on a homogeneous basis.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gradlie/linalg.hpp"

namespace gradlie {

/// Abelian grading group: trivial, Z, or Z/n. Degrees are plain integers,
/// reduced mod n for the cyclic case.
class GradingGroup {
 public:
  enum class Kind { Trivial, Integers, Cyclic };

  GradingGroup() = default;
  static GradingGroup trivial() { return {}; }
  static GradingGroup integers() { return GradingGroup(Kind::Integers, 0); }
  static GradingGroup cyclic(std::int64_t n) {
    if (n < 2) throw GradingViolation("cyclic grading group needs n >= 2");
    return GradingGroup(Kind::Cyclic, n);
  }

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] std::int64_t order() const noexcept { return n_; }

  [[nodiscard]] std::int64_t normalize(std::int64_t d) const {
    switch (kind_) {
      case Kind::Trivial: return 0;
      case Kind::Integers: return d;
      case Kind::Cyclic: return ((d % n_) + n_) % n_;
    }
    return d;
  }
  [[nodiscard]] std::int64_t add(std::int64_t a, std::int64_t b) const { return normalize(a + b); }
  [[nodiscard]] std::int64_t sub(std::int64_t a, std::int64_t b) const { return normalize(a - b); }

  [[nodiscard]] std::string name() const {
    switch (kind_) {
      case Kind::Trivial: return "trivial";
      case Kind::Integers: return "Z";
      case Kind::Cyclic: return "Z/" + std::to_string(n_);
    }
    return "?";
  }

  friend bool operator==(const GradingGroup&, const GradingGroup&) = default;

 private:
  GradingGroup(Kind k, std::int64_t n) : kind_(k), n_(n) {}
  Kind kind_ = Kind::Trivial;
  std::int64_t n_ = 0;
};

/// Sparse structure constants: product of basis i and j as (k, c^k_ij) pairs.
template <ExactField K>
using SparseTable = std::vector<std::vector<std::pair<std::size_t, K>>>;

template <ExactField K>
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Validating constructor. `table[i*dim+j]` holds the nonzero coefficients of [b_i, b_j].
  /// Throws AntisymmetryViolation, GradingViolation or JacobiViolation naming the witness.
  LieAlgebra(FieldTag field, std::vector<std::string> names, SparseTable<K> table,
             GradingGroup group, std::vector<std::int64_t> degrees, bool validate = true)
      : field_(field), names_(std::move(names)), table_(std::move(table)), group_(group),
        degrees_(std::move(degrees)) {
    const std::size_t n = names_.size();
    if (table_.size() != n * n) throw DimensionMismatch("structure table is not dim x dim");
    if (degrees_.empty() && n > 0) degrees_.assign(n, 0);
    if (degrees_.size() != n) throw DimensionMismatch("one degree per basis vector required");
    for (auto& d : degrees_) d = group_.normalize(d);
    for (auto& cell : table_)
      for (auto& [k, c] : cell) {
        if (k >= n) throw DimensionMismatch("structure constant index out of range");
        if (c.field() != field_) throw FieldMismatch("structure constants from a different field");
      }
    if (validate) this->validate();
  }

  /// Dense constructor: `dense[i][j]` is [b_i, b_j] as a coordinate vector.
  static LieAlgebra from_dense(FieldTag field, std::vector<std::string> names,
                               const std::vector<std::vector<Vec<K>>>& dense, GradingGroup group,
                               std::vector<std::int64_t> degrees, bool validate = true) {
    const std::size_t n = names.size();
    SparseTable<K> t(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!dense[i][j][k].is_zero()) t[i * n + j].emplace_back(k, dense[i][j][k]);
    return LieAlgebra(field, std::move(names), std::move(t), group, std::move(degrees), validate);
  }

  [[nodiscard]] FieldTag field() const noexcept { return field_; }
  [[nodiscard]] std::size_t dim() const noexcept { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
  [[nodiscard]] const GradingGroup& group() const noexcept { return group_; }
  [[nodiscard]] const std::vector<std::int64_t>& degrees() const noexcept { return degrees_; }
  [[nodiscard]] std::int64_t degree(std::size_t i) const { return degrees_.at(i); }
  [[nodiscard]] const SparseTable<K>& table() const noexcept { return table_; }

  [[nodiscard]] Vec<K> basis_vector(std::size_t i) const { return unit_vector<K>(field_, dim(), i); }

  /// [b_i, b_j] as a dense coordinate vector.
  [[nodiscard]] Vec<K> bracket_basis(std::size_t i, std::size_t j) const {
    auto v = zero_vector<K>(field_, dim());
    for (const auto& [k, c] : table_[i * dim() + j]) v[k] += c;
    return v;
  }

  [[nodiscard]] Vec<K> bracket(const Vec<K>& x, const Vec<K>& y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket: vector length differs from dim L");
    auto out = zero_vector<K>(field_, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j].is_zero()) continue;
        const auto& cell = table_[i * n + j];
        if (cell.empty()) continue;
        K s = x[i] * y[j];
        for (const auto& [k, c] : cell) out[k] += s * c;
      }
    }
    return out;
  }

  /// Matrix of ad x: column j is [x, b_j].
  [[nodiscard]] Matrix<K> ad(const Vec<K>& x) const {
    const std::size_t n = dim();
    Matrix<K> m(field_, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [k, c] : table_[i * n + j]) m(k, j) += x[i] * c;
    }
    return m;
  }

  [[nodiscard]] bool is_homogeneous(const Vec<K>& v) const {
    std::optional<std::int64_t> d;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) continue;
      if (d && *d != degrees_[i]) return false;
      d = degrees_[i];
    }
    return true;
  }

  /// Degree of a nonzero homogeneous vector.
  [[nodiscard]] std::optional<std::int64_t> degree_of(const Vec<K>& v) const {
    std::optional<std::int64_t> d;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) continue;
      if (d && *d != degrees_[i]) return std::nullopt;
      d = degrees_[i];
    }
    return d;
  }

  /// Sorted distinct degrees of the basis vectors.
  [[nodiscard]] std::vector<std::int64_t> support() const {
    std::set<std::int64_t> s(degrees_.begin(), degrees_.end());
    return {s.begin(), s.end()};
  }

  [[nodiscard]] std::vector<std::size_t> indices_of_degree(std::int64_t d) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim(); ++i)
      if (degrees_[i] == group_.normalize(d)) out.push_back(i);
    return out;
  }

  void validate() const {
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        auto s = add(bracket_basis(i, j), bracket_basis(j, i));
        if (!is_zero_vector(s) || (i == j && !table_[i * n + i].empty()))
          throw AntisymmetryViolation("AntisymmetryViolation(" + names_[i] + "," + names_[j] + ")");
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [k, c] : table_[i * n + j])
          if (!c.is_zero() && degrees_[k] != group_.add(degrees_[i], degrees_[j]))
            throw GradingViolation("GradingViolation(" + names_[i] + "," + names_[j] + "," +
                                   names_[k] + ")");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          auto bi = basis_vector(i), bj = basis_vector(j), bk = basis_vector(k);
          auto s = bracket(bi, bracket_basis(j, k));
          s = add(s, bracket(bj, bracket_basis(k, i)));
          s = add(s, bracket(bk, bracket_basis(i, j)));
          if (!is_zero_vector(s))
            throw JacobiViolation("JacobiViolation(" + names_[i] + "," + names_[j] + "," + names_[k] + ")");
        }
  }

 private:
  FieldTag field_;
  std::vector<std::string> names_;
  SparseTable<K> table_;
  GradingGroup group_;
  std::vector<std::int64_t> degrees_;
};

/// An ideal of some algebra, carried as a subspace of its coordinate space.
template <ExactField K>
struct IdealHandle {
  Subspace<K> space;
  bool graded = false;
};

template <ExactField K>
void check_member(const LieAlgebra<K>& L, const Vec<K>& v) {
  if (v.size() != L.dim()) throw DimensionMismatch("vector length differs from dim L");
}

/// True iff the subspace is spanned by homogeneous vectors (for a basis-aligned
/// grading this is: every echelon row is homogeneous).
template <ExactField K>
bool is_graded_subspace(const LieAlgebra<K>& L, const Subspace<K>& s) {
  for (const auto& r : s.basis())
    if (!L.is_homogeneous(r)) return false;
  return true;
}

template <ExactField K>
Subspace<K> full_space(const LieAlgebra<K>& L) {
  return Subspace<K>::full(L.field(), L.dim());
}

template <ExactField K>
Subspace<K> zero_space(const LieAlgebra<K>& L) {
  return Subspace<K>::zero(L.field(), L.dim());
}

/// Span of [x, y] for x in a basis of X and y in a basis of Y.
template <ExactField K>
Subspace<K> bracket_span(const LieAlgebra<K>& L, const Subspace<K>& X, const Subspace<K>& Y) {
  auto s = zero_space(L);
  for (const auto& x : X.basis())
    for (const auto& y : Y.basis()) s.insert(L.bracket(x, y));
  return s;
}

template <ExactField K>
bool is_subalgebra(const LieAlgebra<K>& L, const Subspace<K>& s) {
  return s.contains(bracket_span(L, s, s));
}

template <ExactField K>
bool is_ideal(const LieAlgebra<K>& L, const Subspace<K>& s) {
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (const auto& v : s.basis())
      if (!s.contains(L.bracket(L.basis_vector(i), v))) return false;
  return true;
}

template <ExactField K>
IdealHandle<K> make_ideal(const LieAlgebra<K>& L, const Subspace<K>& s) {
  if (s.ambient_dim() != L.dim()) throw AmbientMismatch("ideal candidate lives in the wrong space");
  if (!is_ideal(L, s)) throw NotAnIdeal("subspace is not an ideal");
  return {s, is_graded_subspace(L, s)};
}

/// Least ideal containing `start`: the span fixpoint of bracketing with the basis of L.
template <ExactField K>
Subspace<K> ideal_closure(const LieAlgebra<K>& L, Subspace<K> s) {
  std::vector<Vec<K>> frontier = s.basis();
  while (!frontier.empty()) {
    std::vector<Vec<K>> next;
    for (const auto& v : frontier)
      for (std::size_t i = 0; i < L.dim(); ++i) {
        auto w = L.bracket(L.basis_vector(i), v);
        if (s.insert(w)) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return s;
}

template <ExactField K>
IdealHandle<K> ideal_generated(const LieAlgebra<K>& L, const std::vector<Vec<K>>& gens) {
  for (const auto& g : gens) check_member(L, g);
  auto s = ideal_closure(L, Subspace<K>::span(L.field(), L.dim(), gens));
  return {s, is_graded_subspace(L, s)};
}

/// Ann_X(Y) = {x in X : [x, y] = 0 for all y in Y}.
template <ExactField K>
Subspace<K> annihilator(const LieAlgebra<K>& L, const Subspace<K>& X, const Subspace<K>& Y) {
  if (X.ambient_dim() != L.dim() || Y.ambient_dim() != L.dim())
    throw AmbientMismatch("annihilator: subspaces outside L");
  // rows: for each basis y of Y and output coordinate k, the functional x -> [x, y]_k
  std::vector<Vec<K>> rows;
  for (const auto& y : Y.basis()) {
    auto ady = L.ad(y);  // [y, x] = -[x, y]; the sign does not change the kernel
    for (std::size_t k = 0; k < L.dim(); ++k) rows.push_back(ady.row(k));
  }
  auto ker = kernel_of_rows<K>(L.field(), L.dim(), rows);
  return ker.intersect(X);
}

template <ExactField K>
Subspace<K> center(const LieAlgebra<K>& L) {
  return annihilator(L, full_space(L), full_space(L));
}

/// x lies in QAnn(Y) iff (ad x)^2 kills Y.
template <ExactField K>
bool is_in_quadratic_annihilator(const LieAlgebra<K>& L, const Vec<K>& x, const Subspace<K>& Y) {
  check_member(L, x);
  for (const auto& y : Y.basis())
    if (!is_zero_vector(L.bracket(x, L.bracket(x, y)))) return false;
  return true;
}

template <ExactField K>
std::map<std::int64_t, Vec<K>> homogeneous_decompose(const LieAlgebra<K>& L, const Vec<K>& x) {
  check_member(L, x);
  std::map<std::int64_t, Vec<K>> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    auto [it, fresh] = out.try_emplace(L.degree(i), zero_vector<K>(L.field(), L.dim()));
    it->second[i] = x[i];
  }
  return out;
}

/// Projection onto the degree-d component.
template <ExactField K>
Matrix<K> component_projection(const LieAlgebra<K>& L, std::int64_t d) {
  Matrix<K> p(L.field(), L.dim(), L.dim());
  for (auto i : L.indices_of_degree(d)) p(i, i) = one_of<K>(L.field());
  return p;
}

/// Lie algebra structure induced on the echelon basis of a subalgebra.
/// Graded subalgebras inherit degrees from their homogeneous echelon rows.
template <ExactField K>
LieAlgebra<K> induced_subalgebra(const LieAlgebra<K>& L, const Subspace<K>& S,
                                 std::vector<std::string> names = {}) {
  if (!is_subalgebra(L, S)) throw NotASubalgebra("subspace is not closed under the bracket");
  const bool graded = is_graded_subspace(L, S);
  const std::size_t m = S.dim();
  if (names.empty())
    for (std::size_t i = 0; i < m; ++i) {
      // name echelon rows that are basis vectors after them
      const auto& r = S.basis()[i];
      std::size_t nz = 0, last = 0;
      for (std::size_t k = 0; k < r.size(); ++k)
        if (!r[k].is_zero()) ++nz, last = k;
      names.push_back(nz == 1 && r[last].is_one() ? L.names()[last] : "s" + std::to_string(i + 1));
    }
  std::vector<std::int64_t> degrees(m, 0);
  if (graded)
    for (std::size_t i = 0; i < m; ++i) degrees[i] = L.degree_of(S.basis()[i]).value_or(0);
  SparseTable<K> t(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto c = *S.coordinates(L.bracket(S.basis()[i], S.basis()[j]));
      for (std::size_t k = 0; k < m; ++k)
        if (!c[k].is_zero()) t[i * m + j].emplace_back(k, c[k]);
    }
  return LieAlgebra<K>(L.field(), std::move(names), std::move(t),
                       graded ? L.group() : GradingGroup::trivial(), std::move(degrees), false);
}

template <ExactField K>
struct QuotientAlgebra {
  LieAlgebra<K> algebra;
  Matrix<K> projection;                      // dim(L/I) x dim(L)
  std::vector<std::size_t> representatives;  // basis indices of L used as coset representatives
};

/// L / I on the lexicographically first complement of standard basis vectors.
template <ExactField K>
QuotientAlgebra<K> quotient_by_ideal(const LieAlgebra<K>& L, const IdealHandle<K>& I, bool graded_output = true) {
  if (!is_ideal(L, I.space)) throw NotAnIdeal("quotient_by_ideal: not an ideal");
  const bool graded = is_graded_subspace(L, I.space);
  if (graded_output && !graded && L.group().kind() != GradingGroup::Kind::Trivial)
    throw NotGraded("graded quotient requested for a non-graded ideal");
  auto reps = I.space.complement_indices();
  const std::size_t m = reps.size();
  Matrix<K> proj(L.field(), m, L.dim());
  for (std::size_t c = 0; c < L.dim(); ++c) {
    auto r = I.space.reduce(L.basis_vector(c));
    for (std::size_t a = 0; a < m; ++a) proj(a, c) = r[reps[a]];
  }
  std::vector<std::string> names;
  std::vector<std::int64_t> degrees;
  for (auto r : reps) {
    names.push_back(L.names()[r]);
    degrees.push_back(graded_output ? L.degree(r) : 0);
  }
  SparseTable<K> t(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      auto v = proj.apply(L.bracket_basis(reps[a], reps[b]));
      for (std::size_t k = 0; k < m; ++k)
        if (!v[k].is_zero()) t[a * m + b].emplace_back(k, v[k]);
    }
  LieAlgebra<K> Q(L.field(), std::move(names), std::move(t),
                  graded_output ? L.group() : GradingGroup::trivial(), std::move(degrees));
  return {std::move(Q), std::move(proj), std::move(reps)};
}

/// L1 (+) L2 with the two summands commuting; degrees are kept as given.
template <ExactField K>
LieAlgebra<K> direct_sum(const LieAlgebra<K>& A, const LieAlgebra<K>& B,
                         const std::string& suffix_a = "", const std::string& suffix_b = "'") {
  if (A.field() != B.field()) throw FieldMismatch("direct_sum over different fields");
  if (!(A.group() == B.group())) throw GradingViolation("direct_sum of differently graded algebras");
  const std::size_t n = A.dim(), m = B.dim(), d = n + m;
  std::vector<std::string> names;
  std::vector<std::int64_t> degrees;
  for (std::size_t i = 0; i < n; ++i) names.push_back(A.names()[i] + suffix_a), degrees.push_back(A.degree(i));
  for (std::size_t i = 0; i < m; ++i) names.push_back(B.names()[i] + suffix_b), degrees.push_back(B.degree(i));
  SparseTable<K> t(d * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * d + j] = A.table()[i * n + j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (const auto& [k, c] : B.table()[i * m + j]) t[(n + i) * d + (n + j)].emplace_back(n + k, c);
  return LieAlgebra<K>(A.field(), std::move(names), std::move(t), A.group(), std::move(degrees), false);
}

}  // namespace gradlie
