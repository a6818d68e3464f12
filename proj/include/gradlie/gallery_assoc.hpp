#pragma once

// Associative gallery: full matrix algebras with the transpose involution and the
// block-diagonal instance used with the exchange reduction.

#include "gradlie/assoc.hpp"
#include "gradlie/gallery_lie.hpp"

namespace gradlie::gallery {

/// M_n with matrix units e_ij (row-major), trivially graded, transpose involution.
template <ExactField K>
AssocAlgebra<K> m_n_transpose(FieldTag f, std::size_t n) {
  if (n == 0) throw DimensionMismatch("m_n_transpose needs n >= 1");
  const std::size_t d = n * n;
  SparseTable<K> t(d * d);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      names.push_back(detail::unit_name(i, j, n));
      for (std::size_t l = 0; l < n; ++l) t[(i * n + j) * d + (j * n + l)].emplace_back(i * n + l, one_of<K>(f));
    }
  Matrix<K> s(f, d, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(j * n + i, i * n + j) = one_of<K>(f);
  return AssocAlgebra<K>(f, std::move(names), std::move(t), GradingGroup::trivial(), {}, std::move(s));
}

/// A (+) B with componentwise product and involution.
template <ExactField K>
AssocAlgebra<K> assoc_direct_sum(const AssocAlgebra<K>& A, const AssocAlgebra<K>& B,
                                 const std::string& suffix_a = "_1", const std::string& suffix_b = "_2") {
  if (A.field() != B.field()) throw FieldMismatch("assoc_direct_sum over different fields");
  if (!(A.group() == B.group())) throw GradingViolation("assoc_direct_sum of differently graded algebras");
  const std::size_t n = A.dim(), m = B.dim(), d = n + m;
  SparseTable<K> t(d * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * d + j] = A.table()[i * n + j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (const auto& [k, c] : B.table()[i * m + j]) t[(n + i) * d + (n + j)].emplace_back(n + k, c);
  std::vector<std::string> names;
  std::vector<std::int64_t> degrees;
  for (std::size_t i = 0; i < n; ++i) names.push_back(A.names()[i] + suffix_a), degrees.push_back(A.degree(i));
  for (std::size_t i = 0; i < m; ++i) names.push_back(B.names()[i] + suffix_b), degrees.push_back(B.degree(i));
  std::optional<Matrix<K>> s;
  if (A.has_involution() && B.has_involution()) {
    Matrix<K> st(A.field(), d, d);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) st(k, i) = A.involution()(k, i);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) st(n + k, n + i) = B.involution()(k, i);
    s = std::move(st);
  }
  return AssocAlgebra<K>(A.field(), std::move(names), std::move(t), A.group(), std::move(degrees), std::move(s));
}

/// Inside M_2 (+) M_2: diagonal matrices in the first block, all of the second block.
template <ExactField K>
Subspace<K> block_diagonal_subalgebra(FieldTag f) {
  std::vector<Vec<K>> gens;
  for (std::size_t i : {0u, 3u, 4u, 5u, 6u, 7u}) gens.push_back(unit_vector<K>(f, 8, i));
  return Subspace<K>::span(f, 8, gens);
}

}  // namespace gradlie::gallery
