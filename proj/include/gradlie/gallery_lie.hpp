#pragma once

// Named Lie algebras used throughout the tests and the CLI gallery.

#include "gradlie/lie.hpp"

namespace gradlie::gallery {

/// Lie algebra spanned by n x n matrices (row-major, flattened) under the commutator.
/// The span must be closed; structure constants are solved for exactly.
template <ExactField K>
LieAlgebra<K> matrix_lie_algebra(FieldTag f, std::size_t n, std::vector<std::string> names,
                                 const std::vector<Vec<K>>& mats, GradingGroup group,
                                 std::vector<std::int64_t> degrees) {
  const std::size_t d = mats.size();
  auto mul = [&](const Vec<K>& a, const Vec<K>& b) {
    auto c = zero_vector<K>(f, n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (a[i * n + k].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
      }
    return c;
  };
  SparseTable<K> t(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto c = sub(mul(mats[i], mats[j]), mul(mats[j], mats[i]));
      if (is_zero_vector(c)) continue;
      auto coords = solve_combination<K>(f, mats, c);
      if (!coords) throw NotASubalgebra("matrix span not closed under the commutator");
      for (std::size_t k = 0; k < d; ++k)
        if (!(*coords)[k].is_zero()) t[i * d + j].emplace_back(k, (*coords)[k]);
    }
  return LieAlgebra<K>(f, std::move(names), std::move(t), group, std::move(degrees));
}

namespace detail {

inline std::string unit_name(std::size_t i, std::size_t j, std::size_t n) {
  if (n < 10) return "e" + std::to_string(i + 1) + std::to_string(j + 1);
  return "e" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

template <ExactField K>
Vec<K> unit_matrix(FieldTag f, std::size_t n, std::size_t i, std::size_t j) {
  return unit_vector<K>(f, n * n, i * n + j);
}

}  // namespace detail

/// sl_2 on (e12, e21, h) with degrees (1, -1, 0).
template <ExactField K>
LieAlgebra<K> sl2(FieldTag f) {
  auto k = [&](long long v) { return K::from_int(f, v); };
  SparseTable<K> t(9);
  t[0 * 3 + 1] = {{2, k(1)}};
  t[1 * 3 + 0] = {{2, k(-1)}};
  t[2 * 3 + 0] = {{0, k(2)}};
  t[0 * 3 + 2] = {{0, k(-2)}};
  t[2 * 3 + 1] = {{1, k(-2)}};
  t[1 * 3 + 2] = {{1, k(2)}};
  return LieAlgebra<K>(f, {"e12", "e21", "h"}, std::move(t), GradingGroup::integers(), {1, -1, 0});
}

/// Two commuting copies of sl_2, each with the grading (1, -1, 0).
template <ExactField K>
LieAlgebra<K> sl2sum(FieldTag f) {
  auto a = sl2<K>(f);
  auto s = direct_sum(a, a, "_1", "_2");
  s.validate();
  return s;
}

/// Heisenberg algebra [x, y] = z with degrees (1, -1, 0).
template <ExactField K>
LieAlgebra<K> heis3(FieldTag f) {
  SparseTable<K> t(9);
  t[0 * 3 + 1] = {{2, K::from_int(f, 1)}};
  t[1 * 3 + 0] = {{2, K::from_int(f, -1)}};
  return LieAlgebra<K>(f, {"x", "y", "z"}, std::move(t), GradingGroup::integers(), {1, -1, 0});
}

template <ExactField K>
LieAlgebra<K> abelian(FieldTag f, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i + 1));
  return LieAlgebra<K>(f, std::move(names), SparseTable<K>(n * n), GradingGroup::trivial(), {});
}

/// sl_n with the 3-grading induced by the idempotent e11: L_{-1} = span{e1j},
/// L_1 = span{ei1}, L_0 the rest. Basis: off-diagonal units row by row, then
/// h_k = e_kk - e_{k+1,k+1}.
template <ExactField K>
LieAlgebra<K> sln_e11(FieldTag f, std::size_t n) {
  if (n < 2) throw DimensionMismatch("sln_e11 needs n >= 2");
  std::vector<std::string> names;
  std::vector<Vec<K>> mats;
  std::vector<std::int64_t> degrees;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      names.push_back(detail::unit_name(i, j, n));
      mats.push_back(detail::unit_matrix<K>(f, n, i, j));
      degrees.push_back(i == 0 ? -1 : (j == 0 ? 1 : 0));
    }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    names.push_back("h" + std::to_string(k + 1));
    auto m = detail::unit_matrix<K>(f, n, k, k);
    m[(k + 1) * n + k + 1] = K::from_int(f, -1);
    mats.push_back(std::move(m));
    degrees.push_back(0);
  }
  return matrix_lie_algebra<K>(f, n, std::move(names), mats, GradingGroup::integers(), std::move(degrees));
}

/// gl_2 on (e12, e21, h, 1) with degrees (1, -1, 0, 0).
template <ExactField K>
LieAlgebra<K> gl2(FieldTag f) {
  std::vector<Vec<K>> mats = {detail::unit_matrix<K>(f, 2, 0, 1), detail::unit_matrix<K>(f, 2, 1, 0)};
  auto h = detail::unit_matrix<K>(f, 2, 0, 0);
  h[3] = K::from_int(f, -1);
  auto one = detail::unit_matrix<K>(f, 2, 0, 0);
  one[3] = K::from_int(f, 1);
  mats.push_back(h);
  mats.push_back(one);
  return matrix_lie_algebra<K>(f, 2, {"e12", "e21", "h", "1"}, mats, GradingGroup::integers(), {1, -1, 0, 0});
}

/// Realification of (C[x]/x^4, bracket sum (a_r conj(b_s) - b_s conj(a_r)) x^{r+s}).
/// Basis 1, i, x, ix, x2, ix2, x3, ix3 with degree r on x^r and i x^r.
template <ExactField K>
LieAlgebra<K> p_mod_i(FieldTag f) {
  const std::size_t n = 8;
  std::vector<std::string> names = {"1", "i", "x", "ix", "x2", "ix2", "x3", "ix3"};
  std::vector<std::int64_t> degrees = {0, 0, 1, 1, 2, 2, 3, 3};
  SparseTable<K> t(n * n);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t s = 0; s < 4; ++s) {
      if (r + s >= 4) continue;
      const std::size_t target = 2 * (r + s) + 1;  // i x^{r+s}
      // [x^r, i x^s] = -2 i x^{r+s};  [i x^r, x^s] = 2 i x^{r+s}
      t[(2 * r) * n + (2 * s + 1)].emplace_back(target, K::from_int(f, -2));
      t[(2 * r + 1) * n + (2 * s)].emplace_back(target, K::from_int(f, 2));
    }
  return LieAlgebra<K>(f, std::move(names), std::move(t), GradingGroup::integers(), std::move(degrees));
}

/// The subalgebra of constants plus x^2, x^3 terms inside p_mod_i.
template <ExactField K>
Subspace<K> p_mod_i_subalgebra(FieldTag f) {
  std::vector<Vec<K>> gens;
  for (std::size_t i : {0, 1, 4, 5, 6, 7}) gens.push_back(unit_vector<K>(f, 8, i));
  return Subspace<K>::span(f, 8, gens);
}

/// First summand of a direct sum of two copies of an algebra of dimension m.
template <ExactField K>
Subspace<K> first_summand(FieldTag f, std::size_t m) {
  std::vector<Vec<K>> gens;
  for (std::size_t i = 0; i < m; ++i) gens.push_back(unit_vector<K>(f, 2 * m, i));
  return Subspace<K>::span(f, 2 * m, gens);
}

}  // namespace gradlie::gallery
