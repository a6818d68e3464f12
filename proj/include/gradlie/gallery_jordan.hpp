#pragma once

// Jordan gallery: one-dimensional pairs, rectangular matrix pairs, a padded pair with a
// non-absorbed direction, and small triples and algebras.

#include "gradlie/gallery_lie.hpp"
#include "gradlie/jordan.hpp"

namespace gradlie::gallery {

/// V = (F, F) with {x, y, z} = 2xyz.
template <ExactField K>
JordanPair<K> pair_field(FieldTag f) {
  TripleTable<K> t(1);
  t[0].emplace_back(0, K::from_int(f, 2));
  return JordanPair<K>(f, {{{"x"}, {"y"}}}, {t, t});
}

/// (M_{p x q}, M_{q x p}) with {x, y, z} = xyz + zyx; bases a_ij and b_ji row by row.
template <ExactField K>
JordanPair<K> pair_rect(FieldTag f, std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) throw DimensionMismatch("pair_rect needs p, q >= 1");
  // unit matrices as (rows, cols, flat index) and products of units
  auto mul = [](std::size_t r1, std::size_t c1, std::size_t r2, std::size_t c2) -> std::optional<std::pair<std::size_t, std::size_t>> {
    if (c1 != r2) return std::nullopt;
    return std::pair{r1, c2};
  };
  std::array<std::vector<std::string>, 2> names;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) names[0].push_back("a" + std::to_string(i + 1) + std::to_string(j + 1));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < p; ++j) names[1].push_back("b" + std::to_string(i + 1) + std::to_string(j + 1));
  std::array<TripleTable<K>, 2> tables;
  const std::array<std::pair<std::size_t, std::size_t>, 2> shape = {std::pair{p, q}, std::pair{q, p}};
  for (auto s : kSigns) {
    const auto [r, c] = shape[slot(s)];
    const auto [r2, c2] = shape[slot(flip(s))];
    const std::size_t d = r * c, e = r2 * c2;
    auto& t = tables[slot(s)];
    t.assign(d * e * d, {});
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < e; ++j)
        for (std::size_t l = 0; l < d; ++l) {
          const std::size_t xi = i / c, xj = i % c, yi = j / c2, yj = j % c2, zi = l / c, zj = l % c;
          for (const auto& [a, b, g] : {std::tuple{std::pair{xi, xj}, std::pair{yi, yj}, std::pair{zi, zj}},
                                        std::tuple{std::pair{zi, zj}, std::pair{yi, yj}, std::pair{xi, xj}}}) {
            auto ab = mul(a.first, a.second, b.first, b.second);
            if (!ab) continue;
            auto abc = mul(ab->first, ab->second, g.first, g.second);
            if (abc) t[(i * e + j) * d + l].emplace_back(abc->first * c + abc->second, one_of<K>(f));
          }
        }
  }
  return JordanPair<K>(f, std::move(names), std::move(tables));
}

/// Zero triple products on (F^p, F^m).
template <ExactField K>
JordanPair<K> pair_zero(FieldTag f, std::size_t p = 1, std::size_t m = 1) {
  std::array<std::vector<std::string>, 2> names;
  for (std::size_t i = 0; i < p; ++i) names[0].push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < m; ++i) names[1].push_back("y" + std::to_string(i + 1));
  return JordanPair<K>(f, std::move(names), {TripleTable<K>(p * m * p), TripleTable<K>(m * p * m)});
}

/// V x W with componentwise products; names carry the suffixes.
template <ExactField K>
JordanPair<K> product_pair(const JordanPair<K>& A, const JordanPair<K>& B, const std::string& sa = "_1",
                           const std::string& sb = "_2") {
  if (A.field() != B.field()) throw FieldMismatch("product_pair over different fields");
  std::array<std::vector<std::string>, 2> names;
  std::array<TripleTable<K>, 2> tables;
  for (auto s : kSigns) {
    for (const auto& n : A.names(s)) names[slot(s)].push_back(n + sa);
    for (const auto& n : B.names(s)) names[slot(s)].push_back(n + sb);
    const std::size_t da = A.dim(s), ea = A.dim(flip(s)), db = B.dim(s), eb = B.dim(flip(s));
    const std::size_t d = da + db, e = ea + eb;
    auto& t = tables[slot(s)];
    t.assign(d * e * d, {});
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < ea; ++j)
        for (std::size_t l = 0; l < da; ++l) t[(i * e + j) * d + l] = A.table(s)[(i * ea + j) * da + l];
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < eb; ++j)
        for (std::size_t l = 0; l < db; ++l)
          for (const auto& [k, c] : B.table(s)[(i * eb + j) * db + l])
            t[((da + i) * e + (ea + j)) * d + (da + l)].emplace_back(da + k, c);
  }
  return JordanPair<K>(A.field(), std::move(names), std::move(tables));
}

/// W = (F^2, F^2) with only {e1, f1, e1} = 2 e1 and {f1, e1, f1} = 2 f1.
template <ExactField K>
JordanPair<K> pair_padded(FieldTag f) {
  TripleTable<K> t(8);
  t[0].emplace_back(0, K::from_int(f, 2));
  return JordanPair<K>(f, {{{"e1", "e2"}, {"f1", "f2"}}}, {t, t});
}

/// The first coordinates of pair_padded.
template <ExactField K>
SubPair<K> pair_padded_subpair(FieldTag f) {
  auto line = Subspace<K>::span(f, 2, {unit_vector<K>(f, 2, 0)});
  return {{line, line}};
}

/// T = F with {x, y, z} = 2xyz.
template <ExactField K>
JordanTriple<K> triple_field(FieldTag f) {
  TripleTable<K> t(1);
  t[0].emplace_back(0, K::from_int(f, 2));
  return JordanTriple<K>(f, {"t"}, std::move(t));
}

/// J = F with x o y = xy.
template <ExactField K>
JordanAlgebra<K> jalg_field(FieldTag f) {
  SparseTable<K> t(1);
  t[0].emplace_back(0, one_of<K>(f));
  return JordanAlgebra<K>(f, {"1"}, std::move(t));
}

/// Sym_2 on (e11, e22, s12 = e12 + e21) with x o y = (xy + yx) / 2.
template <ExactField K>
JordanAlgebra<K> jalg_sym2(FieldTag f) {
  const std::array<Vec<K>, 3> mats = {
      Vec<K>{one_of<K>(f), zero_of<K>(f), zero_of<K>(f), zero_of<K>(f)},
      Vec<K>{zero_of<K>(f), zero_of<K>(f), zero_of<K>(f), one_of<K>(f)},
      Vec<K>{zero_of<K>(f), one_of<K>(f), one_of<K>(f), zero_of<K>(f)},
  };
  auto matmul = [&](const Vec<K>& a, const Vec<K>& b) {
    Vec<K> c(4, zero_of<K>(f));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) c[i * 2 + j] += a[i * 2 + k] * b[k * 2 + j];
    return c;
  };
  const K h = K::from_int(f, 2).inverse();
  SparseTable<K> t(9);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      auto c = scaled(add(matmul(mats[i], mats[j]), matmul(mats[j], mats[i])), h);
      // symmetric c = c00 e11 + c11 e22 + c01 s12
      const std::array<K, 3> coords = {c[0], c[3], c[1]};
      for (std::size_t k = 0; k < 3; ++k)
        if (!coords[k].is_zero()) t[i * 3 + j].emplace_back(k, coords[k]);
    }
  return JordanAlgebra<K>(f, {"e11", "e22", "s12"}, std::move(t));
}

}  // namespace gradlie::gallery
