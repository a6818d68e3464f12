#pragma once

// Dense exact linear algebra: matrices, reduced row-echelon form, kernels,
// and subspaces kept in canonical reduced echelon form so that equality of
// subspaces is equality of bases.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gradlie/scalar.hpp"

namespace gradlie {

template <ExactField K>
using Vec = std::vector<K>;

template <ExactField K>
Vec<K> zero_vector(const FieldTag& f, std::size_t n) {
  return Vec<K>(n, zero_of<K>(f));
}

template <ExactField K>
Vec<K> unit_vector(const FieldTag& f, std::size_t n, std::size_t i) {
  auto v = zero_vector<K>(f, n);
  v.at(i) = one_of<K>(f);
  return v;
}

template <ExactField K>
bool is_zero_vector(const Vec<K>& v) {
  return std::all_of(v.begin(), v.end(), [](const K& x) { return x.is_zero(); });
}

template <ExactField K>
void axpy(Vec<K>& y, const K& a, const Vec<K>& x) {
  if (y.size() != x.size()) throw DimensionMismatch("axpy: length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

template <ExactField K>
Vec<K> scaled(Vec<K> v, const K& a) {
  for (auto& x : v) x *= a;
  return v;
}

template <ExactField K>
Vec<K> add(Vec<K> a, const Vec<K>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector add: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <ExactField K>
Vec<K> sub(Vec<K> a, const Vec<K>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sub: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <ExactField K>
K dot(const Vec<K>& a, const Vec<K>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  K s = a.empty() ? K{} : a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

/// Row-major dense matrix over one field.
template <ExactField K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldTag f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, zero_of<K>(f)) {}

  static Matrix identity(FieldTag f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_of<K>(f);
    return m;
  }

  static Matrix from_rows(FieldTag f, std::size_t cols, const std::vector<Vec<K>>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("from_rows: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) {
        if (rows[i][j].field() != f) throw FieldMismatch("matrix entries from different fields");
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(FieldTag f, std::size_t rows, const std::vector<Vec<K>>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw DimensionMismatch("from_columns: ragged columns");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  [[nodiscard]] FieldTag field() const noexcept { return field_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] Vec<K> row(std::size_t i) const {
    return Vec<K>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  [[nodiscard]] Vec<K> column(std::size_t j) const {
    Vec<K> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }
  [[nodiscard]] std::vector<Vec<K>> row_list() const {
    std::vector<Vec<K>> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const K& x) { return x.is_zero(); });
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  [[nodiscard]] Vec<K> apply(const Vec<K>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector: size mismatch");
    auto out = zero_vector<K>(field_, rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j].is_zero()) continue;
      for (std::size_t i = 0; i < rows_; ++i)
        if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
    if (a.field_ != b.field_) throw FieldMismatch("matrix product over different fields");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const K& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }
  friend Matrix operator*(Matrix a, const K& s) { return s * std::move(a); }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
  }

  [[nodiscard]] K trace() const {
    if (rows_ != cols_) throw DimensionMismatch("trace of a non-square matrix");
    K t = zero_of<K>(field_);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  [[nodiscard]] K determinant() const {
    if (rows_ != cols_) throw DimensionMismatch("determinant of a non-square matrix");
    Matrix m = *this;
    K det = one_of<K>(field_);
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t piv = c;
      while (piv < rows_ && m(piv, c).is_zero()) ++piv;
      if (piv == rows_) return zero_of<K>(field_);
      if (piv != c) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m(piv, j), m(c, j));
        det = -det;
      }
      det *= m(c, c);
      K inv = m(c, c).inverse();
      for (std::size_t r = c + 1; r < rows_; ++r) {
        if (m(r, c).is_zero()) continue;
        K f = m(r, c) * inv;
        for (std::size_t j = c; j < cols_; ++j) m(r, j) -= f * m(c, j);
      }
    }
    return det;
  }

  [[nodiscard]] std::size_t rank() const;

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix shapes differ");
    if (field_ != b.field_) throw FieldMismatch("matrices over different fields");
  }

  FieldTag field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;
};

namespace detail {

/// Brings `rows` to reduced row-echelon form in place, dropping zero rows.
/// Returns the pivot column of each surviving row.
template <ExactField K>
std::vector<std::size_t> rref_in_place(std::vector<Vec<K>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    K inv = rows[r][c].inverse();
    if (!rows[r][c].is_one())
      for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      K f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace detail

template <ExactField K>
std::size_t Matrix<K>::rank() const {
  auto rows = row_list();
  return detail::rref_in_place(rows, cols_).size();
}

/// Subspace of K^n represented by its unique reduced row-echelon basis.
template <ExactField K>
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(FieldTag f, std::size_t n) {
    Subspace s;
    s.field_ = f;
    s.ambient_ = n;
    return s;
  }
  static Subspace full(FieldTag f, std::size_t n) {
    Subspace s = zero(f, n);
    for (std::size_t i = 0; i < n; ++i) {
      s.rows_.push_back(unit_vector<K>(f, n, i));
      s.pivots_.push_back(i);
    }
    return s;
  }
  static Subspace span(FieldTag f, std::size_t n, std::vector<Vec<K>> vectors) {
    for (const auto& v : vectors) {
      if (v.size() != n) throw AmbientMismatch("span: vector of length " + std::to_string(v.size()) +
                                               " in ambient dimension " + std::to_string(n));
      for (const auto& x : v)
        if (x.field() != f) throw FieldMismatch("span: mixed field tags");
    }
    Subspace s = zero(f, n);
    s.pivots_ = detail::rref_in_place(vectors, n);
    s.rows_ = std::move(vectors);
    return s;
  }

  [[nodiscard]] FieldTag field() const noexcept { return field_; }
  [[nodiscard]] std::size_t ambient_dim() const noexcept { return ambient_; }
  [[nodiscard]] std::size_t dim() const noexcept { return rows_.size(); }
  [[nodiscard]] bool is_zero() const noexcept { return rows_.empty(); }
  [[nodiscard]] bool is_full() const noexcept { return rows_.size() == ambient_; }
  [[nodiscard]] const std::vector<Vec<K>>& basis() const noexcept { return rows_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// v minus its projection along the echelon basis; zero iff v is in the span.
  [[nodiscard]] Vec<K> reduce(Vec<K> v) const {
    check_vector(v);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const K c = v[pivots_[i]];
      if (!c.is_zero()) axpy(v, -c, rows_[i]);
    }
    return v;
  }

  [[nodiscard]] bool contains(const Vec<K>& v) const { return is_zero_vector(reduce(v)); }

  [[nodiscard]] bool contains(const Subspace& w) const {
    check_ambient(w);
    return std::all_of(w.rows_.begin(), w.rows_.end(), [&](const Vec<K>& r) { return contains(r); });
  }

  /// Coordinates of v with respect to the echelon basis, or nullopt if v is outside.
  [[nodiscard]] std::optional<Vec<K>> coordinates(const Vec<K>& v) const {
    if (!contains(v)) return std::nullopt;
    Vec<K> c;
    c.reserve(rows_.size());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
  }

  [[nodiscard]] Vec<K> combine(const Vec<K>& coords) const {
    if (coords.size() != rows_.size()) throw DimensionMismatch("combine: wrong coordinate count");
    auto v = zero_vector<K>(field_, ambient_);
    for (std::size_t i = 0; i < rows_.size(); ++i) axpy(v, coords[i], rows_[i]);
    return v;
  }

  /// Adds v to the span; returns true if the dimension grew.
  bool insert(const Vec<K>& v) {
    Vec<K> r = reduce(v);
    auto it = std::find_if(r.begin(), r.end(), [](const K& x) { return !x.is_zero(); });
    if (it == r.end()) return false;
    std::size_t p = static_cast<std::size_t>(it - r.begin());
    K inv = r[p].inverse();
    for (auto& x : r) x *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (!rows_[i][p].is_zero()) axpy(rows_[i], -rows_[i][p], r);
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
  }

  [[nodiscard]] Subspace sum(const Subspace& w) const {
    check_ambient(w);
    Subspace s = *this;
    for (const auto& r : w.rows_) s.insert(r);
    return s;
  }

  /// Orthogonal complement for the standard bilinear form; (S^perp)^perp = S over any field.
  [[nodiscard]] Subspace perp() const;

  [[nodiscard]] Subspace intersect(const Subspace& w) const {
    check_ambient(w);
    return perp().sum(w.perp()).perp();
  }

  /// Indices of the standard basis vectors that complete the echelon basis.
  [[nodiscard]] std::vector<std::size_t> complement_indices() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t i = 0; i < ambient_; ++i) {
      if (k < pivots_.size() && pivots_[k] == i) {
        ++k;
        continue;
      }
      out.push_back(i);
    }
    return out;
  }

  bool operator==(const Subspace& o) const {
    return field_ == o.field_ && ambient_ == o.ambient_ && rows_ == o.rows_;
  }
  /// Total order (ambient, dim, echelon rows) for sorted catalogs.
  bool operator<(const Subspace& o) const {
    if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
    if (rows_.size() != o.rows_.size()) return rows_.size() < o.rows_.size();
    return rows_ < o.rows_;
  }

 private:
  void check_vector(const Vec<K>& v) const {
    if (v.size() != ambient_)
      throw AmbientMismatch("vector of length " + std::to_string(v.size()) +
                            " against subspace of ambient dimension " + std::to_string(ambient_));
  }
  void check_ambient(const Subspace& w) const {
    if (w.ambient_ != ambient_) throw AmbientMismatch("subspaces live in different ambient spaces");
    if (w.field_ != field_) throw FieldMismatch("subspaces over different fields");
  }

  FieldTag field_;
  std::size_t ambient_ = 0;
  std::vector<Vec<K>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Solution space of m x = 0, canonicalized.
template <ExactField K>
Subspace<K> kernel_basis(const Matrix<K>& m) {
  const auto f = m.field();
  auto rows = m.row_list();
  for (const auto& r : rows)
    for (const auto& x : r)
      if (x.field() != f) throw FieldMismatch("kernel_basis: mixed field tags");
  auto pivots = detail::rref_in_place(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec<K>> gens;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    auto v = unit_vector<K>(f, m.cols(), free);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
    gens.push_back(std::move(v));
  }
  return Subspace<K>::span(f, m.cols(), std::move(gens));
}

template <ExactField K>
Subspace<K> kernel_of_rows(FieldTag f, std::size_t cols, const std::vector<Vec<K>>& rows) {
  return kernel_basis(Matrix<K>::from_rows(f, cols, rows));
}

template <ExactField K>
Subspace<K> Subspace<K>::perp() const {
  return kernel_of_rows<K>(field_, ambient_, rows_);
}

/// Some c with sum_i c_i * vectors[i] == target, or nullopt.
template <ExactField K>
std::optional<Vec<K>> solve_combination(FieldTag f, const std::vector<Vec<K>>& vectors, const Vec<K>& target) {
  const std::size_t n = target.size();
  const std::size_t m = vectors.size();
  std::vector<Vec<K>> rows(n, zero_vector<K>(f, m + 1));
  for (std::size_t j = 0; j < m; ++j) {
    if (vectors[j].size() != n) throw DimensionMismatch("solve_combination: length mismatch");
    for (std::size_t i = 0; i < n; ++i) rows[i][j] = vectors[j][i];
  }
  for (std::size_t i = 0; i < n; ++i) rows[i][m] = target[i];
  auto pivots = detail::rref_in_place(rows, m + 1);
  auto c = zero_vector<K>(f, m);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == m) return std::nullopt;
    c[pivots[i]] = rows[i][m];
  }
  return c;
}

/// Coordinates with respect to a fixed list of independent vectors, after one
/// elimination: each vector is augmented with a unit tag that tracks combinations.
template <ExactField K>
class CoordinateSolver {
 public:
  CoordinateSolver(FieldTag f, std::size_t ambient, const std::vector<Vec<K>>& vectors)
      : field_(f), ambient_(ambient), count_(vectors.size()) {
    std::vector<Vec<K>> aug;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != ambient) throw DimensionMismatch("CoordinateSolver: vector length");
      auto v = vectors[i];
      v.resize(ambient + count_, zero_of<K>(f));
      v[ambient + i] = one_of<K>(f);
      aug.push_back(std::move(v));
    }
    span_ = Subspace<K>::span(f, ambient + count_, std::move(aug));
    for (auto p : span_.pivots())
      if (p >= ambient_) throw DimensionMismatch("CoordinateSolver: vectors are dependent");
  }

  [[nodiscard]] std::size_t size() const noexcept { return count_; }

  [[nodiscard]] std::optional<Vec<K>> solve(const Vec<K>& target) const {
    if (target.size() != ambient_) throw DimensionMismatch("CoordinateSolver: target length");
    auto v = target;
    v.resize(ambient_ + count_, zero_of<K>(field_));
    auto r = span_.reduce(std::move(v));
    for (std::size_t i = 0; i < ambient_; ++i)
      if (!r[i].is_zero()) return std::nullopt;
    Vec<K> c(r.begin() + static_cast<std::ptrdiff_t>(ambient_), r.end());
    for (auto& x : c) x = -x;
    return c;
  }

 private:
  FieldTag field_;
  std::size_t ambient_ = 0;
  std::size_t count_ = 0;
  Subspace<K> span_;
};

template <ExactField K>
std::string to_string(const Vec<K>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace gradlie
