#pragma once

// Graded associative algebras with involution and the Lie algebras they carry:
// A^-, the skew elements K_A, [K_A, K_A], [A, A], and their central quotients.

#include <optional>
#include <string>
#include <vector>

#include "gradlie/quotients.hpp"

namespace gradlie {

template <ExactField K>
class AssocAlgebra {
 public:
  AssocAlgebra() = default;

  /// `table[i*dim+j]` holds b_i b_j. Column i of `involution` is b_i*.
  /// Throws AssociativityViolation, GradingViolation or InvolutionViolation naming the witness.
  AssocAlgebra(FieldTag field, std::vector<std::string> names, SparseTable<K> table, GradingGroup group,
               std::vector<std::int64_t> degrees, std::optional<Matrix<K>> involution = std::nullopt,
               bool validate = true)
      : field_(field), names_(std::move(names)), table_(std::move(table)), group_(group),
        degrees_(std::move(degrees)), star_(std::move(involution)) {
    const std::size_t n = names_.size();
    if (table_.size() != n * n) throw DimensionMismatch("structure table is not dim x dim");
    if (degrees_.empty() && n > 0) degrees_.assign(n, 0);
    if (degrees_.size() != n) throw DimensionMismatch("one degree per basis vector required");
    for (auto& d : degrees_) d = group_.normalize(d);
    for (const auto& cell : table_)
      for (const auto& [k, c] : cell) {
        if (k >= n) throw DimensionMismatch("structure constant index out of range");
        if (c.field() != field_) throw FieldMismatch("structure constants from a different field");
      }
    if (star_ && (star_->rows() != n || star_->cols() != n))
      throw DimensionMismatch("involution must be dim x dim");
    if (validate) this->validate();
  }

  [[nodiscard]] FieldTag field() const noexcept { return field_; }
  [[nodiscard]] std::size_t dim() const noexcept { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
  [[nodiscard]] const GradingGroup& group() const noexcept { return group_; }
  [[nodiscard]] const std::vector<std::int64_t>& degrees() const noexcept { return degrees_; }
  [[nodiscard]] std::int64_t degree(std::size_t i) const { return degrees_.at(i); }
  [[nodiscard]] const SparseTable<K>& table() const noexcept { return table_; }
  [[nodiscard]] bool has_involution() const noexcept { return star_.has_value(); }
  [[nodiscard]] const Matrix<K>& involution() const {
    if (!star_) throw NoInvolution("algebra carries no involution");
    return *star_;
  }

  [[nodiscard]] Vec<K> basis_vector(std::size_t i) const { return unit_vector<K>(field_, dim(), i); }

  [[nodiscard]] Vec<K> multiply(const Vec<K>& x, const Vec<K>& y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw DimensionMismatch("product: vector length differs from dim A");
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

  [[nodiscard]] Vec<K> commutator(const Vec<K>& x, const Vec<K>& y) const {
    return sub(multiply(x, y), multiply(y, x));
  }

  [[nodiscard]] Vec<K> star(const Vec<K>& x) const { return involution().apply(x); }

  void validate() const {
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [k, c] : table_[i * n + j])
          if (!c.is_zero() && degrees_[k] != group_.add(degrees_[i], degrees_[j]))
            throw GradingViolation("GradingViolation(" + names_[i] + "," + names_[j] + "," + names_[k] + ")");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto ij = multiply(basis_vector(i), basis_vector(j));
        for (std::size_t k = 0; k < n; ++k) {
          auto bk = basis_vector(k);
          if (multiply(ij, bk) != multiply(basis_vector(i), multiply(basis_vector(j), bk)))
            throw AssociativityViolation("AssociativityViolation(" + names_[i] + "," + names_[j] + "," +
                                         names_[k] + ")");
        }
      }
    if (!star_) return;
    const auto& s = *star_;
    if (s * s != Matrix<K>::identity(field_, n)) throw InvolutionViolation("InvolutionViolation(order)");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (!s(k, i).is_zero() && degrees_[k] != degrees_[i])
          throw InvolutionViolation("InvolutionViolation(degree," + names_[i] + ")");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (s.apply(multiply(basis_vector(i), basis_vector(j))) != multiply(s.column(j), s.column(i)))
          throw InvolutionViolation("InvolutionViolation(" + names_[i] + "," + names_[j] + ")");
  }

 private:
  FieldTag field_;
  std::vector<std::string> names_;
  SparseTable<K> table_;
  GradingGroup group_;
  std::vector<std::int64_t> degrees_;
  std::optional<Matrix<K>> star_;
};

/// A^- on the same basis and grading.
template <ExactField K>
LieAlgebra<K> minus_algebra(const AssocAlgebra<K>& A) {
  const std::size_t n = A.dim();
  SparseTable<K> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto c = A.commutator(A.basis_vector(i), A.basis_vector(j));
      for (std::size_t k = 0; k < n; ++k)
        if (!c[k].is_zero()) t[i * n + j].emplace_back(k, c[k]);
    }
  return LieAlgebra<K>(A.field(), A.names(), std::move(t), A.group(), A.degrees());
}

/// Kernel of x -> x* + x.
template <ExactField K>
Subspace<K> skew_elements(const AssocAlgebra<K>& A) {
  const auto& s = A.involution();
  auto m = s + Matrix<K>::identity(A.field(), A.dim());
  return kernel_basis(m);
}

template <ExactField K>
Subspace<K> symmetric_elements(const AssocAlgebra<K>& A) {
  const auto& s = A.involution();
  auto m = s - Matrix<K>::identity(A.field(), A.dim());
  return kernel_basis(m);
}

template <ExactField K>
bool is_star_subalgebra(const AssocAlgebra<K>& A, const Subspace<K>& S) {
  for (const auto& x : S.basis()) {
    if (A.has_involution() && !S.contains(A.star(x))) return false;
    for (const auto& y : S.basis())
      if (!S.contains(A.multiply(x, y))) return false;
  }
  return true;
}

/// A^0: same space, reversed product, same involution.
template <ExactField K>
AssocAlgebra<K> opposite(const AssocAlgebra<K>& A) {
  const std::size_t n = A.dim();
  SparseTable<K> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = A.table()[j * n + i];
  std::optional<Matrix<K>> s;
  if (A.has_involution()) s = A.involution();
  return AssocAlgebra<K>(A.field(), A.names(), std::move(t), A.group(), A.degrees(), std::move(s), false);
}

/// A (+) A^0 with the exchange involution (a, b)* = (b, a). Basis: A's basis with suffix
/// "_1", then A^0's with suffix "_2".
template <ExactField K>
AssocAlgebra<K> exchange_double(const AssocAlgebra<K>& A) {
  const std::size_t n = A.dim(), d = 2 * n;
  SparseTable<K> t(d * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t[i * d + j] = A.table()[i * n + j];
      for (const auto& [k, c] : A.table()[j * n + i]) t[(n + i) * d + (n + j)].emplace_back(n + k, c);
    }
  std::vector<std::string> names;
  std::vector<std::int64_t> degrees;
  for (std::size_t i = 0; i < n; ++i) names.push_back(A.names()[i] + "_1"), degrees.push_back(A.degree(i));
  for (std::size_t i = 0; i < n; ++i) names.push_back(A.names()[i] + "_2"), degrees.push_back(A.degree(i));
  Matrix<K> s(A.field(), d, d);
  for (std::size_t i = 0; i < n; ++i) {
    s(n + i, i) = one_of<K>(A.field());
    s(i, n + i) = one_of<K>(A.field());
  }
  return AssocAlgebra<K>(A.field(), std::move(names), std::move(t), A.group(), std::move(degrees), std::move(s));
}

/// Matrix of a -> (a, -a), from A into A (+) A^0 (2n x n).
template <ExactField K>
Matrix<K> exchange_map(const AssocAlgebra<K>& A) {
  const std::size_t n = A.dim();
  Matrix<K> m(A.field(), 2 * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = one_of<K>(A.field());
    m(n + i, i) = -one_of<K>(A.field());
  }
  return m;
}

/// Checks that a -> (a, -a) is a degree-preserving bracket isomorphism A^- -> K_{A (+) A^0}.
template <ExactField K>
bool exchange_isomorphism_holds(const AssocAlgebra<K>& A) {
  auto D = exchange_double(A);
  auto m = exchange_map(A);
  auto skew = skew_elements(D);
  if (skew.dim() != A.dim() || m.rank() != A.dim()) return false;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    auto img = m.column(i);
    if (!skew.contains(img) || D.degree(i) != A.degree(i)) return false;
    for (std::size_t j = 0; j < A.dim(); ++j)
      if (m.apply(A.commutator(A.basis_vector(i), A.basis_vector(j))) != D.commutator(img, m.column(j)))
        return false;
  }
  return true;
}

enum class LieVariant { Skew, SkewDerived, Minus, Derived };

inline std::string variant_name(LieVariant v) {
  switch (v) {
    case LieVariant::Skew: return "K";
    case LieVariant::SkewDerived: return "[K,K]";
    case LieVariant::Minus: return "minus";
    case LieVariant::Derived: return "[A,A]";
  }
  return "?";
}

inline LieVariant parse_variant(const std::string& s) {
  if (s == "K" || s == "skew") return LieVariant::Skew;
  if (s == "[K,K]" || s == "KK" || s == "skew-derived") return LieVariant::SkewDerived;
  if (s == "minus" || s == "A-") return LieVariant::Minus;
  if (s == "[A,A]" || s == "AA" || s == "derived") return LieVariant::Derived;
  throw ParseError("unknown Lie variant '" + s + "' (expected K, [K,K], minus or [A,A])");
}

/// The subspace of A carrying the requested Lie algebra, restricted to the *-subalgebra S.
template <ExactField K>
Subspace<K> variant_space(const AssocAlgebra<K>& A, const Subspace<K>& S, LieVariant v) {
  const auto minus = minus_algebra(A);
  switch (v) {
    case LieVariant::Minus: return S;
    case LieVariant::Derived: return bracket_span(minus, S, S);
    case LieVariant::Skew: return skew_elements(A).intersect(S);
    case LieVariant::SkewDerived: {
      auto k = skew_elements(A).intersect(S);
      return bracket_span(minus, k, k);
    }
  }
  throw InternalError("variant_space: unhandled variant");
}

template <ExactField K>
struct CentralQuotient {
  Subspace<K> space;      // the Lie algebra as a subspace of A
  LieAlgebra<K> algebra;  // induced on the echelon basis of `space`
  Subspace<K> center;     // in coordinates of `algebra`
  QuotientAlgebra<K> quotient;
};

/// Builds K_A, [K_A,K_A], A^- or [A,A] and divides out its center.
template <ExactField K>
CentralQuotient<K> central_quotient_pipeline(const AssocAlgebra<K>& A, LieVariant v) {
  auto space = variant_space(A, Subspace<K>::full(A.field(), A.dim()), v);
  auto algebra = induced_subalgebra(minus_algebra(A), space);
  auto z = center(algebra);
  auto q = quotient_by_ideal(algebra, IdealHandle<K>{z, is_graded_subspace(algebra, z)});
  return {std::move(space), std::move(algebra), std::move(z), std::move(q)};
}

template <ExactField K>
struct Theorem28Report {
  LieVariant variant = LieVariant::Skew;
  bool via_exchange = false;     // minus variant realized as K of the exchange double
  std::size_t a_dim = 0, q_dim = 0;
  std::size_t lie_a_dim = 0, lie_q_dim = 0;
  std::size_t center_a_dim = 0, center_q_dim = 0;
  std::size_t quotient_a_dim = 0, quotient_q_dim = 0;
  bool center_compatible = false;  // Z of the small Lie algebra is exactly its intersection with Z of the big one
  bool exchange_isomorphism = true;
  std::optional<QuotientVerdict<K>> verdict;
  std::string assumption = "Q is contained in the symmetric quotient ring of A (asserted by the caller)";

  [[nodiscard]] bool passed() const {
    return center_compatible && exchange_isomorphism && verdict && verdict->decision.is_true();
  }
};

/// Runs the graded quotient decider on X_A / Z inside X_Q / Z for the chosen variant, where
/// A is the *-subalgebra `A_space` of `Q`. The minus variants go through the exchange double.
template <ExactField K>
Theorem28Report<K> theorem28_check(const AssocAlgebra<K>& Q, const Subspace<K>& A_space, LieVariant v,
                                   std::uint64_t budget = default_budget()) {
  if (A_space.ambient_dim() != Q.dim()) throw AmbientMismatch("subalgebra lives in a different algebra");
  if (!is_star_subalgebra(Q, A_space)) throw NotASubalgebra("A is not a *-subalgebra of Q");
  Theorem28Report<K> r;
  r.variant = v;
  r.a_dim = A_space.dim();
  r.q_dim = Q.dim();

  AssocAlgebra<K> big = Q;
  Subspace<K> small = A_space;
  LieVariant inner = v;
  if (v == LieVariant::Minus || v == LieVariant::Derived) {
    r.via_exchange = true;
    r.exchange_isomorphism = exchange_isomorphism_holds(Q);
    big = exchange_double(Q);
    const std::size_t n = Q.dim();
    std::vector<Vec<K>> gens;
    for (const auto& a : A_space.basis()) {
      auto lo = zero_vector<K>(Q.field(), 2 * n), hi = zero_vector<K>(Q.field(), 2 * n);
      for (std::size_t i = 0; i < n; ++i) lo[i] = a[i], hi[n + i] = a[i];
      gens.push_back(lo), gens.push_back(hi);
    }
    small = Subspace<K>::span(Q.field(), 2 * n, gens);
    inner = v == LieVariant::Minus ? LieVariant::Skew : LieVariant::SkewDerived;
  } else if (!Q.has_involution()) {
    throw NoInvolution("the skew variants need an involution");
  }

  auto X_Q = variant_space(big, Subspace<K>::full(big.field(), big.dim()), inner);
  auto X_A = variant_space(big, small, inner);
  if (!X_Q.contains(X_A)) throw InternalError("theorem28_check: small Lie algebra escapes the big one");
  auto LQ = induced_subalgebra(minus_algebra(big), X_Q);
  auto LA = induced_subalgebra(minus_algebra(big), X_A);
  r.lie_q_dim = LQ.dim();
  r.lie_a_dim = LA.dim();

  auto zq = center(LQ);
  auto za = center(LA);
  r.center_q_dim = zq.dim();
  r.center_a_dim = za.dim();
  auto quot = quotient_by_ideal(LQ, IdealHandle<K>{zq, is_graded_subspace(LQ, zq)});
  r.quotient_q_dim = quot.algebra.dim();

  std::vector<Vec<K>> image;
  for (const auto& x : X_A.basis()) image.push_back(quot.projection.apply(*X_Q.coordinates(x)));
  auto img = Subspace<K>::span(big.field(), quot.algebra.dim(), image);
  r.quotient_a_dim = img.dim();
  r.center_compatible = img.dim() + za.dim() == X_A.dim();
  if (!r.center_compatible) return r;

  QuotientEmbedding<K> E(quot.algebra, img);
  r.verdict = is_quotient(E, true, budget);
  return r;
}

}  // namespace gradlie
