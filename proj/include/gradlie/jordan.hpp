#pragma once

// Jordan pairs, triple systems and algebras over fields with 2 and 3 invertible.
// Axioms are checked on multilinearized basis tuples; ideals, annihilators and the
// TKK algebra are exact linear algebra.

#include <algorithm>
#include <array>
#include <functional>

#include "gradlie/analysis.hpp"
#include "gradlie/enumerate.hpp"

namespace gradlie {

enum class Sign : std::size_t { Plus = 0, Minus = 1 };

constexpr Sign flip(Sign s) noexcept { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr std::size_t slot(Sign s) noexcept { return static_cast<std::size_t>(s); }
inline const char* sign_name(Sign s) noexcept { return s == Sign::Plus ? "+" : "-"; }
inline constexpr std::array<Sign, 2> kSigns = {Sign::Plus, Sign::Minus};

/// Trilinear structure constants; see JordanPair for the index layout.
template <ExactField K>
using TripleTable = std::vector<std::vector<std::pair<std::size_t, K>>>;

inline void require_jordan_characteristic(FieldTag f) {
  if (f.characteristic == 2 || f.characteristic == 3)
    throw BadCharacteristic("Jordan structures need 2 and 3 invertible, got " + f.name());
}

namespace detail {

/// `count` interchangeable arguments drawn from a space of dimension `dim`.
struct SlotGroup {
  std::size_t dim = 0;
  std::size_t count = 0;
};

template <ExactField K>
using SlotEval = std::function<Vec<K>(const std::vector<std::vector<Vec<K>>>&)>;

// The sum over distinct orderings of a multiset of basis indices is the coefficient of that
// monomial in the generic element, so all such sums vanishing is the identity in every
// scalar extension, whatever the characteristic.
template <ExactField K>
std::optional<std::vector<std::vector<std::size_t>>> linearized_failure(FieldTag f,
                                                                        const std::vector<SlotGroup>& groups,
                                                                        const SlotEval<K>& eval) {
  const std::size_t g = groups.size();
  for (const auto& gr : groups)
    if (gr.dim == 0 && gr.count > 0) return std::nullopt;
  std::vector<std::vector<std::size_t>> ms(g);
  for (std::size_t k = 0; k < g; ++k) ms[k].assign(groups[k].count, 0);
  auto next_multiset = [](std::vector<std::size_t>& m, std::size_t dim) {
    for (std::size_t i = m.size(); i-- > 0;)
      if (m[i] + 1 < dim) {
        ++m[i];
        for (std::size_t j = i + 1; j < m.size(); ++j) m[j] = m[i];
        return true;
      }
    return false;
  };
  std::vector<std::vector<Vec<K>>> args(g);
  while (true) {
    auto perm = ms;
    std::optional<Vec<K>> total;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == g) {
        for (std::size_t a = 0; a < g; ++a) {
          args[a].clear();
          for (auto i : perm[a]) args[a].push_back(unit_vector<K>(f, groups[a].dim, i));
        }
        auto v = eval(args);
        total = total ? add(std::move(*total), v) : v;
        return;
      }
      do rec(k + 1);
      while (std::next_permutation(perm[k].begin(), perm[k].end()));
    };
    rec(0);
    if (total && !is_zero_vector(*total)) return ms;
    std::size_t k = g;
    bool advanced = false;
    while (k-- > 0)
      if (next_multiset(ms[k], groups[k].dim)) {
        for (std::size_t j = k + 1; j < g; ++j) std::fill(ms[j].begin(), ms[j].end(), 0);
        advanced = true;
        break;
      }
    if (!advanced) return std::nullopt;
  }
}

/// Pointwise evaluation over every element of F_p^dim per group (all slots of a group equal).
inline bool exhaustive_holds(FieldTag f, const std::vector<SlotGroup>& groups, const SlotEval<Fp>& eval) {
  const std::size_t g = groups.size();
  std::vector<Vec<Fp>> point(g);
  for (std::size_t k = 0; k < g; ++k) point[k] = zero_vector<Fp>(f, groups[k].dim);
  std::vector<std::vector<Vec<Fp>>> args(g);
  auto bump = [&](Vec<Fp>& v) {
    for (auto& c : v) {
      c += one_of<Fp>(f);
      if (!c.is_zero()) return true;
    }
    return false;
  };
  while (true) {
    for (std::size_t k = 0; k < g; ++k) args[k].assign(groups[k].count, point[k]);
    if (!is_zero_vector(eval(args))) return false;
    std::size_t k = 0;
    while (k < g && !bump(point[k])) ++k;
    if (k == g) return true;
  }
}

inline std::string index_list(const std::vector<std::size_t>& m, const std::vector<std::string>& names) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + names[m[i]];
  return s + "]";
}

inline constexpr std::uint64_t kExhaustiveAxiomCap = 200000;

inline std::uint64_t point_count(std::uint64_t p, const std::vector<SlotGroup>& groups) {
  std::size_t d = 0;
  for (const auto& gr : groups) d += gr.dim;
  return field_size_power(p, d);
}

/// Residual of `res` on each basis vector of S; returns the subspace of S where it vanishes.
template <ExactField K>
Subspace<K> kernel_within(const Subspace<K>& S, const std::function<Vec<K>(const Vec<K>&)>& res) {
  const FieldTag f = S.field();
  if (S.dim() == 0) return S;
  std::vector<Vec<K>> cols;
  for (const auto& s : S.basis()) cols.push_back(res(s));
  const std::size_t rows = cols.front().size();
  if (rows == 0) return S;
  auto ker = kernel_basis(Matrix<K>::from_columns(f, rows, cols));
  std::vector<Vec<K>> out;
  for (const auto& c : ker.basis()) out.push_back(S.combine(c));
  return Subspace<K>::span(f, S.ambient_dim(), out);
}

template <ExactField K>
void append(Vec<K>& out, const Vec<K>& v) {
  out.insert(out.end(), v.begin(), v.end());
}

}  // namespace detail

// ---------------------------------------------------------------- Jordan pairs

template <ExactField K>
class JordanPair {
 public:
  JordanPair() = default;

  /// `tables[s][(i*e + j)*d + l]` lists {b_i, c_j, b_l}^s for b in V^s (dim d), c in V^-s (dim e).
  /// Throws BadCharacteristic, or AxiomViolation naming the identity, sign and basis tuple.
  JordanPair(FieldTag field, std::array<std::vector<std::string>, 2> names, std::array<TripleTable<K>, 2> tables,
             bool validate = true)
      : field_(field), names_(std::move(names)), tables_(std::move(tables)) {
    require_jordan_characteristic(field_);
    for (auto s : kSigns) {
      const std::size_t d = dim(s), e = dim(flip(s));
      if (tables_[slot(s)].size() != d * e * d) throw DimensionMismatch("triple table has the wrong size");
      for (const auto& cell : tables_[slot(s)])
        for (const auto& [k, c] : cell) {
          if (k >= d) throw DimensionMismatch("triple product index out of range");
          if (c.field() != field_) throw FieldMismatch("structure constants from a different field");
        }
    }
    if (validate) this->validate();
  }

  [[nodiscard]] FieldTag field() const noexcept { return field_; }
  [[nodiscard]] std::size_t dim(Sign s) const noexcept { return names_[slot(s)].size(); }
  [[nodiscard]] const std::vector<std::string>& names(Sign s) const noexcept { return names_[slot(s)]; }
  [[nodiscard]] const TripleTable<K>& table(Sign s) const noexcept { return tables_[slot(s)]; }
  [[nodiscard]] Vec<K> basis_vector(Sign s, std::size_t i) const { return unit_vector<K>(field_, dim(s), i); }

  [[nodiscard]] Vec<K> triple_basis(Sign s, std::size_t i, std::size_t j, std::size_t l) const {
    const std::size_t d = dim(s), e = dim(flip(s));
    auto v = zero_vector<K>(field_, d);
    for (const auto& [k, c] : tables_[slot(s)][(i * e + j) * d + l]) v[k] += c;
    return v;
  }

  /// {x, y, z}^s with x, z in V^s and y in V^-s.
  [[nodiscard]] Vec<K> triple(Sign s, const Vec<K>& x, const Vec<K>& y, const Vec<K>& z) const {
    const std::size_t d = dim(s), e = dim(flip(s));
    if (x.size() != d || z.size() != d || y.size() != e) throw DimensionMismatch("triple: argument outside V^s / V^-s");
    auto out = zero_vector<K>(field_, d);
    const auto& t = tables_[slot(s)];
    for (std::size_t i = 0; i < d; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < e; ++j) {
        if (y[j].is_zero()) continue;
        const K xy = x[i] * y[j];
        for (std::size_t l = 0; l < d; ++l) {
          if (z[l].is_zero()) continue;
          const auto& cell = t[(i * e + j) * d + l];
          if (cell.empty()) continue;
          const K s3 = xy * z[l];
          for (const auto& [k, c] : cell) out[k] += s3 * c;
        }
      }
    }
    return out;
  }

  /// Q_x y = 1/2 {x, y, x}.
  [[nodiscard]] Vec<K> quadratic(Sign s, const Vec<K>& x, const Vec<K>& y) const {
    return scaled(triple(s, x, y, x), half());
  }

  /// D_{x,y}: z -> {x, y, z} on V^s.
  [[nodiscard]] Matrix<K> D(Sign s, const Vec<K>& x, const Vec<K>& y) const {
    std::vector<Vec<K>> cols;
    for (std::size_t l = 0; l < dim(s); ++l) cols.push_back(triple(s, x, y, basis_vector(s, l)));
    return Matrix<K>::from_columns(field_, dim(s), cols);
  }

  [[nodiscard]] bool is_zero_product() const {
    for (const auto& t : tables_)
      for (const auto& cell : t)
        for (const auto& [k, c] : cell)
          if (!c.is_zero()) return false;
    return true;
  }

  [[nodiscard]] K half() const { return K::from_int(field_, 2).inverse(); }

  void validate() const {
    for (auto s : kSigns) {
      const std::size_t d = dim(s), e = dim(flip(s));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < e; ++j)
          for (std::size_t l = i + 1; l < d; ++l)
            if (triple_basis(s, i, j, l) != triple_basis(s, l, j, i))
              throw AxiomViolation(std::string("AxiomViolation(symmetry,") + sign_name(s) + "," + names(s)[i] + "," +
                                   names(flip(s))[j] + "," + names(s)[l] + ")");
    }
    for (auto s : kSigns)
      for (const auto& [name, groups, eval] : identities(s)) {
        auto bad = detail::linearized_failure<K>(field_, groups, eval);
        if (bad) {
          const auto& xs = names(s);
          const auto& ys = names(flip(s));
          const auto& zs = name == "JP2" ? xs : ys;
          throw AxiomViolation("AxiomViolation(" + name + "," + sign_name(s) + ",x=" +
                               detail::index_list((*bad)[0], xs) + ",y=" + detail::index_list((*bad)[1], ys) +
                               ",z=" + detail::index_list((*bad)[2], zs) + ")");
        }
        if constexpr (std::is_same_v<K, Fp>) {
          if (detail::point_count(field_.characteristic, groups) <= detail::kExhaustiveAxiomCap &&
              !detail::exhaustive_holds(field_, groups, eval))
            throw InternalError("pointwise " + name + " fails although its linearization holds");
        }
      }
  }

  /// The three pair identities for sign s as (name, slot groups, difference of both sides).
  [[nodiscard]] std::vector<std::tuple<std::string, std::vector<detail::SlotGroup>, detail::SlotEval<K>>> identities(
      Sign s) const {
    const std::size_t d = dim(s), e = dim(flip(s));
    const Sign m = flip(s);
    const K h = half();
    std::vector<std::tuple<std::string, std::vector<detail::SlotGroup>, detail::SlotEval<K>>> out;
    // D_{x,y} Q_x z = Q_x D_{y,x} z
    out.emplace_back("JP1", std::vector<detail::SlotGroup>{{d, 3}, {e, 1}, {e, 1}},
                     [this, s, m, h](const std::vector<std::vector<Vec<K>>>& a) {
                       const auto &x = a[0], &y = a[1], &z = a[2];
                       auto lhs = triple(s, x[0], y[0], scaled(triple(s, x[1], z[0], x[2]), h));
                       auto rhs = scaled(triple(s, x[0], triple(m, y[0], x[1], z[0]), x[2]), h);
                       return sub(lhs, rhs);
                     });
    // D_{Q_x y, y} z = D_{x, Q_y x} z
    out.emplace_back("JP2", std::vector<detail::SlotGroup>{{d, 2}, {e, 2}, {d, 1}},
                     [this, s, m, h](const std::vector<std::vector<Vec<K>>>& a) {
                       const auto &x = a[0], &y = a[1], &z = a[2];
                       auto lhs = triple(s, scaled(triple(s, x[0], y[0], x[1]), h), y[1], z[0]);
                       auto rhs = triple(s, x[0], scaled(triple(m, y[0], x[1], y[1]), h), z[0]);
                       return sub(lhs, rhs);
                     });
    // Q_{Q_x y} z = Q_x Q_y Q_x z
    out.emplace_back("JP3", std::vector<detail::SlotGroup>{{d, 4}, {e, 2}, {e, 1}},
                     [this, s, m, h](const std::vector<std::vector<Vec<K>>>& a) {
                       const auto &x = a[0], &y = a[1], &z = a[2];
                       auto lhs = scaled(triple(s, scaled(triple(s, x[0], y[0], x[1]), h), z[0],
                                                scaled(triple(s, x[2], y[1], x[3]), h)),
                                         h);
                       auto inner = scaled(triple(s, x[1], z[0], x[2]), h);
                       auto rhs = scaled(triple(s, x[0], scaled(triple(m, y[0], inner, y[1]), h), x[3]), h);
                       return sub(lhs, rhs);
                     });
    return out;
  }

 private:
  FieldTag field_;
  std::array<std::vector<std::string>, 2> names_;
  std::array<TripleTable<K>, 2> tables_;
};

// ---------------------------------------------------------------- triple systems and algebras

template <ExactField K>
class JordanTriple {
 public:
  JordanTriple() = default;

  /// `table[(i*d + j)*d + l]` lists {b_i, b_j, b_l}. Validated through the double pair (T, T).
  JordanTriple(FieldTag field, std::vector<std::string> names, TripleTable<K> table, bool validate = true)
      : field_(field), names_(std::move(names)), table_(std::move(table)) {
    require_jordan_characteristic(field_);
    const std::size_t d = dim();
    if (table_.size() != d * d * d) throw DimensionMismatch("triple table has the wrong size");
    if (validate) (void)double_pair();
  }

  [[nodiscard]] FieldTag field() const noexcept { return field_; }
  [[nodiscard]] std::size_t dim() const noexcept { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
  [[nodiscard]] const TripleTable<K>& table() const noexcept { return table_; }

  /// V(T) = (T, T); minus-side names carry a prime.
  [[nodiscard]] JordanPair<K> double_pair(bool validate = true) const {
    std::vector<std::string> primed;
    for (const auto& n : names_) primed.push_back(n + "'");
    return JordanPair<K>(field_, {names_, primed}, {table_, table_}, validate);
  }

  [[nodiscard]] Vec<K> triple(const Vec<K>& x, const Vec<K>& y, const Vec<K>& z) const {
    return double_pair(false).triple(Sign::Plus, x, y, z);
  }

 private:
  FieldTag field_;
  std::vector<std::string> names_;
  TripleTable<K> table_;
};

template <ExactField K>
class JordanAlgebra {
 public:
  JordanAlgebra() = default;

  /// `table[i*d + j]` lists b_i o b_j. Throws AxiomViolation on non-commutativity or a
  /// failing linearized Jordan identity.
  JordanAlgebra(FieldTag field, std::vector<std::string> names, SparseTable<K> table, bool validate = true)
      : field_(field), names_(std::move(names)), table_(std::move(table)) {
    require_jordan_characteristic(field_);
    const std::size_t d = dim();
    if (table_.size() != d * d) throw DimensionMismatch("product table has the wrong size");
    if (validate) this->validate();
  }

  [[nodiscard]] FieldTag field() const noexcept { return field_; }
  [[nodiscard]] std::size_t dim() const noexcept { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
  [[nodiscard]] const SparseTable<K>& table() const noexcept { return table_; }
  [[nodiscard]] Vec<K> basis_vector(std::size_t i) const { return unit_vector<K>(field_, dim(), i); }

  [[nodiscard]] Vec<K> multiply(const Vec<K>& x, const Vec<K>& y) const {
    const std::size_t d = dim();
    if (x.size() != d || y.size() != d) throw DimensionMismatch("product: vector length differs from dim J");
    auto out = zero_vector<K>(field_, d);
    for (std::size_t i = 0; i < d; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (y[j].is_zero()) continue;
        const K s = x[i] * y[j];
        for (const auto& [k, c] : table_[i * d + j]) out[k] += s * c;
      }
    }
    return out;
  }

  /// The unit element, if there is one.
  [[nodiscard]] std::optional<Vec<K>> unit() const {
    const std::size_t d = dim();
    // u o b_i = b_i for all i: d^2 linear equations in the d coordinates of u
    std::vector<Vec<K>> rows;
    Vec<K> rhs;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) {
        Vec<K> r = zero_vector<K>(field_, d);
        for (std::size_t j = 0; j < d; ++j) r[j] = multiply(basis_vector(j), basis_vector(i))[k];
        rows.push_back(r);
        rhs.push_back(i == k ? one_of<K>(field_) : zero_of<K>(field_));
      }
    // columns of the system are the maps b_j o -, flattened
    std::vector<Vec<K>> cols(d);
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& r : rows) cols[j].push_back(r[j]);
    return solve_combination<K>(field_, cols, rhs);
  }

  void validate() const {
    const std::size_t d = dim();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        if (multiply(basis_vector(i), basis_vector(j)) != multiply(basis_vector(j), basis_vector(i)))
          throw AxiomViolation("AxiomViolation(commutativity," + names_[i] + "," + names_[j] + ")");
    // (x^2 o y) o x = x^2 o (y o x)
    detail::SlotEval<K> eval = [this](const std::vector<std::vector<Vec<K>>>& a) {
      const auto &x = a[0], &y = a[1];
      auto x2 = multiply(x[0], x[1]);
      return sub(multiply(multiply(x2, y[0]), x[2]), multiply(x2, multiply(y[0], x[2])));
    };
    std::vector<detail::SlotGroup> groups{{d, 3}, {d, 1}};
    if (auto bad = detail::linearized_failure<K>(field_, groups, eval))
      throw AxiomViolation("AxiomViolation(Jordan identity,x=" + detail::index_list((*bad)[0], names_) +
                           ",y=" + detail::index_list((*bad)[1], names_) + ")");
  }

 private:
  FieldTag field_;
  std::vector<std::string> names_;
  SparseTable<K> table_;
};

/// J_T with {x, y, z} = U_{x,z} y = 2(x o (z o y) + z o (x o y) - (x o z) o y), the
/// linearization of U_x y = 2 x o (x o y) - x^2 o y.
template <ExactField K>
JordanTriple<K> triple_of_algebra(const JordanAlgebra<K>& J) {
  const std::size_t d = J.dim();
  const K two = K::from_int(J.field(), 2);
  TripleTable<K> t(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) {
        auto x = J.basis_vector(i), y = J.basis_vector(j), z = J.basis_vector(l);
        auto v = add(J.multiply(x, J.multiply(z, y)), J.multiply(z, J.multiply(x, y)));
        v = sub(v, J.multiply(J.multiply(x, z), y));
        for (std::size_t k = 0; k < d; ++k)
          if (!v[k].is_zero()) t[(i * d + j) * d + l].emplace_back(k, two * v[k]);
      }
  return JordanTriple<K>(J.field(), J.names(), std::move(t));
}

// ---------------------------------------------------------------- subpairs, ideals, annihilators

template <ExactField K>
struct SubPair {
  std::array<Subspace<K>, 2> parts;

  [[nodiscard]] const Subspace<K>& operator[](Sign s) const { return parts[slot(s)]; }
  [[nodiscard]] Subspace<K>& operator[](Sign s) { return parts[slot(s)]; }
  [[nodiscard]] std::size_t dim() const { return parts[0].dim() + parts[1].dim(); }
  [[nodiscard]] bool is_zero() const { return parts[0].is_zero() && parts[1].is_zero(); }
  [[nodiscard]] bool contains(const SubPair& o) const { return parts[0].contains(o.parts[0]) && parts[1].contains(o.parts[1]); }
  bool operator==(const SubPair& o) const { return parts == o.parts; }
  bool operator<(const SubPair& o) const { return parts < o.parts; }
};

template <ExactField K>
SubPair<K> full_subpair(const JordanPair<K>& V) {
  return {{Subspace<K>::full(V.field(), V.dim(Sign::Plus)), Subspace<K>::full(V.field(), V.dim(Sign::Minus))}};
}

template <ExactField K>
SubPair<K> zero_subpair(const JordanPair<K>& V) {
  return {{Subspace<K>::zero(V.field(), V.dim(Sign::Plus)), Subspace<K>::zero(V.field(), V.dim(Sign::Minus))}};
}

/// span {X, Y, Z}^s for X, Z in V^s and Y in V^-s.
template <ExactField K>
Subspace<K> triple_span(const JordanPair<K>& V, Sign s, const Subspace<K>& X, const Subspace<K>& Y,
                        const Subspace<K>& Z) {
  auto out = Subspace<K>::zero(V.field(), V.dim(s));
  for (const auto& x : X.basis())
    for (const auto& y : Y.basis())
      for (const auto& z : Z.basis()) out.insert(V.triple(s, x, y, z));
  return out;
}

template <ExactField K>
bool is_subpair(const JordanPair<K>& V, const SubPair<K>& S) {
  for (auto s : kSigns)
    if (!S[s].contains(triple_span(V, s, S[s], S[flip(s)], S[s]))) return false;
  return true;
}

/// I is an ideal of the subpair S: {I, S, S} + {S, S, I} + {S, I, S} stay in I.
template <ExactField K>
bool is_pair_ideal(const JordanPair<K>& V, const SubPair<K>& I, const SubPair<K>& S) {
  if (!S.contains(I)) return false;
  for (auto s : kSigns) {
    if (!I[s].contains(triple_span(V, s, I[s], S[flip(s)], S[s]))) return false;
    if (!I[s].contains(triple_span(V, s, S[s], I[flip(s)], S[s]))) return false;
  }
  return true;
}

template <ExactField K>
bool is_pair_ideal(const JordanPair<K>& V, const SubPair<K>& I) {
  return is_pair_ideal(V, I, full_subpair(V));
}

/// Smallest ideal of S containing X.
template <ExactField K>
SubPair<K> pair_ideal_closure(const JordanPair<K>& V, SubPair<K> X, const SubPair<K>& S) {
  while (true) {
    bool grew = false;
    for (auto s : kSigns) {
      auto a = triple_span(V, s, X[s], S[flip(s)], S[s]);
      auto b = triple_span(V, s, S[s], X[flip(s)], S[s]);
      for (const auto* sp : {&a, &b})
        for (const auto& v : sp->basis()) grew |= X[s].insert(v);
    }
    if (!grew) return X;
  }
}

template <ExactField K>
SubPair<K> pair_ideal_closure(const JordanPair<K>& V, SubPair<K> X) {
  return pair_ideal_closure(V, std::move(X), full_subpair(V));
}

/// Ideal of S generated by one homogeneous element.
template <ExactField K>
SubPair<K> principal_pair_ideal(const JordanPair<K>& V, Sign s, const Vec<K>& x, const SubPair<K>& S) {
  auto X = SubPair<K>{{Subspace<K>::zero(V.field(), V.dim(Sign::Plus)), Subspace<K>::zero(V.field(), V.dim(Sign::Minus))}};
  X[s].insert(x);
  return pair_ideal_closure(V, std::move(X), S);
}

/// Largest ideal of S contained in A.
template <ExactField K>
SubPair<K> largest_pair_ideal_in(const JordanPair<K>& V, SubPair<K> A, const SubPair<K>& S) {
  for (auto s : kSigns) A[s] = A[s].intersect(S[s]);
  while (true) {
    SubPair<K> next = A;
    for (auto s : kSigns) {
      const Sign m = flip(s);
      next[s] = detail::kernel_within<K>(A[s], [&](const Vec<K>& x) {
        Vec<K> r;
        for (const auto& y : S[m].basis())
          for (const auto& z : S[s].basis()) detail::append(r, A[s].reduce(V.triple(s, x, y, z)));
        for (const auto& y : S[m].basis())
          for (const auto& w : S[m].basis()) detail::append(r, A[m].reduce(V.triple(m, y, x, w)));
        return r;
      });
    }
    if (next == A) return A;
    A = std::move(next);
  }
}

/// Ann_S(X)^s = {z in S^s : {z, X^-s, S^s} = {z, S^-s, X^s} = {S^-s, z, X^-s} = 0}.
template <ExactField K>
SubPair<K> pair_annihilator(const JordanPair<K>& V, const SubPair<K>& X, const SubPair<K>& S) {
  SubPair<K> out = S;
  for (auto s : kSigns) {
    const Sign m = flip(s);
    out[s] = detail::kernel_within<K>(S[s], [&](const Vec<K>& z) {
      Vec<K> r;
      for (const auto& x : X[m].basis())
        for (const auto& v : S[s].basis()) detail::append(r, V.triple(s, z, x, v));
      for (const auto& w : S[m].basis())
        for (const auto& x : X[s].basis()) detail::append(r, V.triple(s, z, w, x));
      for (const auto& w : S[m].basis())
        for (const auto& x : X[m].basis()) detail::append(r, V.triple(m, w, z, x));
      return r;
    });
  }
  return out;
}

template <ExactField K>
SubPair<K> pair_annihilator(const JordanPair<K>& V, const SubPair<K>& X) {
  return pair_annihilator(V, X, full_subpair(V));
}

/// Q_{I^s} I^-s = 0 for both signs; with 2 invertible this is {I^s, I^-s, I^s} = 0.
template <ExactField K>
bool is_trivial_pair_ideal(const JordanPair<K>& V, const SubPair<K>& I) {
  for (auto s : kSigns)
    if (!triple_span(V, s, I[s], I[flip(s)], I[s]).is_zero()) return false;
  return true;
}

/// Q_x = 0.
template <ExactField K>
bool is_pair_absolute_zero_divisor(const JordanPair<K>& V, Sign s, const Vec<K>& x) {
  for (std::size_t j = 0; j < V.dim(flip(s)); ++j)
    if (!is_zero_vector(V.triple(s, x, V.basis_vector(flip(s), j), x))) return false;
  return true;
}

/// Witness vector layout for pair decisions: coordinates of V^+ then V^-.
template <ExactField K>
Vec<K> pair_vector(const JordanPair<K>& V, Sign s, const Vec<K>& x) {
  auto out = zero_vector<K>(V.field(), V.dim(Sign::Plus) + V.dim(Sign::Minus));
  const std::size_t off = s == Sign::Plus ? 0 : V.dim(Sign::Plus);
  for (std::size_t i = 0; i < x.size(); ++i) out[off + i] = x[i];
  return out;
}

/// Distinct principal ideals of homogeneous elements of S, by exhaustive scan over F_p.
inline std::vector<SubPair<Fp>> pair_principal_ideals(const JordanPair<Fp>& V, const SubPair<Fp>& S,
                                                      std::uint64_t budget = default_budget()) {
  const std::uint64_t p = V.field().characteristic;
  const auto total = field_size_power(p, S[Sign::Plus].dim()) + field_size_power(p, S[Sign::Minus].dim());
  if (total > budget)
    throw DimensionTooLarge("pair scan of " + std::to_string(total) + " elements exceeds the budget of " +
                            std::to_string(budget));
  std::vector<SubPair<Fp>> out;
  for (auto s : kSigns)
    for_each_projective_in(S[s], [&](const Vec<Fp>& x) {
      auto I = principal_pair_ideal(V, s, x, S);
      if (std::find(out.begin(), out.end(), I) == out.end()) out.push_back(std::move(I));
      return true;
    });
  std::sort(out.begin(), out.end());
  return out;
}

template <ExactField K>
struct Tkk;

template <ExactField K>
Tkk<K> tkk(const JordanPair<K>& V);

/// Strong nondegeneracy: no x != 0 with Q_x = 0. Exhaustive over F_p; over Q certified
/// through a nondegenerate Killing form of TKK(V), refuted by basis or annihilator witnesses.
template <ExactField K>
Decision<K> pair_is_strongly_nondegenerate(const JordanPair<K>& V, std::uint64_t budget = default_budget()) {
  auto full = full_subpair(V);
  auto ann = pair_annihilator(V, full);
  for (auto s : kSigns)
    if (!ann[s].is_zero()) return Decision<K>::no(Method::Structural, pair_vector(V, s, ann[s].basis().front()));
  if constexpr (std::is_same_v<K, Fp>) {
    const std::uint64_t p = V.field().characteristic;
    const auto total = field_size_power(p, V.dim(Sign::Plus)) + field_size_power(p, V.dim(Sign::Minus));
    if (total > budget) throw DimensionTooLarge("pair scan exceeds the budget of " + std::to_string(budget));
    for (auto s : kSigns) {
      std::optional<Vec<Fp>> hit;
      for_each_projective(V.field(), V.dim(s), [&](const Vec<Fp>& x) {
        if (is_pair_absolute_zero_divisor(V, s, x)) hit = x;
        return !hit;
      });
      if (hit) return Decision<K>::no(Method::ExhaustiveFp, pair_vector(V, s, *hit));
    }
    return Decision<K>::yes(Method::ExhaustiveFp);
  } else {
    for (auto s : kSigns)
      for (std::size_t i = 0; i < V.dim(s); ++i)
        if (is_pair_absolute_zero_divisor(V, s, V.basis_vector(s, i)))
          return Decision<K>::no(Method::Structural, pair_vector(V, s, V.basis_vector(s, i)));
    // an absolute zero divisor of V is one of TKK(V), so a semisimple TKK(V) certifies
    auto T = tkk(V);
    if (!killing_determinant(T.algebra).is_zero())
      return Decision<K>::yes(Method::KillingCriterion, "Killing form of TKK(V) is nondegenerate");
    return Decision<K>::undecided(Method::Unavailable, "no absolute zero divisor among basis vectors; TKK(V) not semisimple");
  }
}

/// Semiprime: no nonzero ideal I with Q_I I = 0. Exhaustive over principal ideals over F_p;
/// over Q decided by strong nondegeneracy or a trivial ideal generated by a witness.
template <ExactField K>
Decision<K> pair_is_semiprime(const JordanPair<K>& V, std::uint64_t budget = default_budget()) {
  auto full = full_subpair(V);
  auto ann = pair_annihilator(V, full);
  for (auto s : kSigns)
    if (!ann[s].is_zero()) return Decision<K>::no(Method::AnnihilatorCriterion, pair_vector(V, s, ann[s].basis().front()));
  if constexpr (std::is_same_v<K, Fp>) {
    for (const auto& I : pair_principal_ideals(V, full, budget))
      if (is_trivial_pair_ideal(V, I)) {
        const Sign s = I[Sign::Plus].is_zero() ? Sign::Minus : Sign::Plus;
        return Decision<K>::no(Method::ExhaustiveFp, pair_vector(V, s, I[s].basis().front()));
      }
    return Decision<K>::yes(Method::ExhaustiveFp);
  } else {
    for (auto s : kSigns)
      for (std::size_t i = 0; i < V.dim(s); ++i)
        if (is_trivial_pair_ideal(V, principal_pair_ideal(V, s, V.basis_vector(s, i), full)))
          return Decision<K>::no(Method::Structural, pair_vector(V, s, V.basis_vector(s, i)));
    auto sn = pair_is_strongly_nondegenerate(V, budget);
    if (sn.is_true()) return Decision<K>::yes(sn.method, "strongly nondegenerate");
    return Decision<K>::undecided(Method::Unavailable, "not certified over Q");
  }
}

/// Essential: meets every nonzero ideal. Over F_p by the principal-ideal catalog; otherwise
/// by Ann_V(I) = 0, which is equivalent for semiprime V.
template <ExactField K>
Decision<K> is_essential_pair_ideal(const JordanPair<K>& V, const SubPair<K>& I, std::uint64_t budget = default_budget()) {
  if (!is_pair_ideal(V, I)) throw NotAPairIdeal("is_essential_pair_ideal: not an ideal");
  if constexpr (std::is_same_v<K, Fp>) {
    for (const auto& P : pair_principal_ideals(V, full_subpair(V), budget))
      if (P[Sign::Plus].intersect(I[Sign::Plus]).is_zero() && P[Sign::Minus].intersect(I[Sign::Minus]).is_zero()) {
        const Sign s = P[Sign::Plus].is_zero() ? Sign::Minus : Sign::Plus;
        return Decision<K>::no(Method::ExhaustiveFp, pair_vector(V, s, P[s].basis().front()));
      }
    return Decision<K>::yes(Method::ExhaustiveFp);
  } else {
    auto sp = pair_is_semiprime(V, budget);
    if (!sp.is_true()) return Decision<K>::undecided(Method::Unavailable, "semiprimeness not certified");
    auto ann = pair_annihilator(V, I);
    for (auto s : kSigns)
      if (!ann[s].is_zero()) return Decision<K>::no(Method::AnnihilatorCriterion, pair_vector(V, s, ann[s].basis().front()));
    return Decision<K>::yes(Method::AnnihilatorCriterion);
  }
}

// ---------------------------------------------------------------- derivations and TKK

/// Pairs (d+, d-) flattened as d+ (row-major) followed by d-.
template <ExactField K>
struct InnerDerivationSpace {
  std::vector<std::array<Matrix<K>, 2>> basis;
  Subspace<K> span;

  [[nodiscard]] std::size_t dim() const noexcept { return basis.size(); }
};

template <ExactField K>
Vec<K> flatten_pair_map(const std::array<Matrix<K>, 2>& d) {
  Vec<K> v;
  for (const auto& m : d)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

template <ExactField K>
std::array<Matrix<K>, 2> unflatten_pair_map(const JordanPair<K>& V, const Vec<K>& v) {
  const std::size_t p = V.dim(Sign::Plus), m = V.dim(Sign::Minus);
  Matrix<K> a(V.field(), p, p), b(V.field(), m, m);
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t c = 0; c < p; ++c) a(r, c) = v[r * p + c];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) b(r, c) = v[p * p + r * m + c];
  return {std::move(a), std::move(b)};
}

/// delta(x, y) = (D_{x,y}, -D_{y,x}) for x in V^+, y in V^-.
template <ExactField K>
std::array<Matrix<K>, 2> inner_derivation(const JordanPair<K>& V, const Vec<K>& x, const Vec<K>& y) {
  return {V.D(Sign::Plus, x, y), (-one_of<K>(V.field())) * V.D(Sign::Minus, y, x)};
}

template <ExactField K>
bool is_pair_derivation(const JordanPair<K>& V, const std::array<Matrix<K>, 2>& d) {
  for (auto s : kSigns) {
    const Sign m = flip(s);
    const auto &ds = d[slot(s)], &dm = d[slot(m)];
    for (std::size_t i = 0; i < V.dim(s); ++i)
      for (std::size_t j = 0; j < V.dim(m); ++j)
        for (std::size_t l = 0; l < V.dim(s); ++l) {
          auto x = V.basis_vector(s, i), y = V.basis_vector(m, j), z = V.basis_vector(s, l);
          auto rhs = add(V.triple(s, ds.apply(x), y, z), V.triple(s, x, dm.apply(y), z));
          rhs = add(rhs, V.triple(s, x, y, ds.apply(z)));
          if (ds.apply(V.triple(s, x, y, z)) != rhs) return false;
        }
  }
  return true;
}

/// IDer(V) on the echelon basis of the span of delta(b_i, c_j).
template <ExactField K>
InnerDerivationSpace<K> inner_derivations(const JordanPair<K>& V) {
  const std::size_t p = V.dim(Sign::Plus), m = V.dim(Sign::Minus);
  auto span = Subspace<K>::zero(V.field(), p * p + m * m);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < m; ++j)
      span.insert(flatten_pair_map(inner_derivation(V, V.basis_vector(Sign::Plus, i), V.basis_vector(Sign::Minus, j))));
  InnerDerivationSpace<K> out{{}, span};
  for (const auto& r : span.basis()) out.basis.push_back(unflatten_pair_map(V, r));
  return out;
}

/// TKK(V) = V^+ (+) IDer(V) (+) V^- with degrees 1, 0, -1, in that basis order.
template <ExactField K>
struct Tkk {
  LieAlgebra<K> algebra;
  InnerDerivationSpace<K> ider;
  std::size_t plus_dim = 0, zero_dim = 0, minus_dim = 0;

  [[nodiscard]] std::size_t offset(Sign s) const noexcept { return s == Sign::Plus ? 0 : plus_dim + zero_dim; }
  [[nodiscard]] Vec<K> embed(Sign s, const Vec<K>& x) const {
    auto v = zero_vector<K>(algebra.field(), algebra.dim());
    for (std::size_t i = 0; i < x.size(); ++i) v[offset(s) + i] = x[i];
    return v;
  }
  [[nodiscard]] Vec<K> restrict_to(Sign s, const Vec<K>& v) const {
    const std::size_t n = s == Sign::Plus ? plus_dim : minus_dim;
    return Vec<K>(v.begin() + static_cast<std::ptrdiff_t>(offset(s)),
                  v.begin() + static_cast<std::ptrdiff_t>(offset(s) + n));
  }
  [[nodiscard]] Subspace<K> part(Sign s, const Subspace<K>& X) const {
    std::vector<Vec<K>> gens;
    for (const auto& x : X.basis()) gens.push_back(embed(s, x));
    return Subspace<K>::span(algebra.field(), algebra.dim(), gens);
  }
};

template <ExactField K>
Tkk<K> tkk(const JordanPair<K>& V) {
  const FieldTag f = V.field();
  auto ider = inner_derivations(V);
  const std::size_t p = V.dim(Sign::Plus), k = ider.dim(), m = V.dim(Sign::Minus), d = p + k + m;
  std::vector<Vec<K>> flat;
  for (const auto& g : ider.basis) flat.push_back(flatten_pair_map(g));
  CoordinateSolver<K> solver(f, p * p + m * m, flat);
  auto ider_coords = [&](const std::array<Matrix<K>, 2>& g) {
    auto c = solver.solve(flatten_pair_map(g));
    if (!c) throw InternalError("TKK: map outside IDer(V)");
    return *c;
  };

  SparseTable<K> t(d * d);
  auto put = [&](std::size_t a, std::size_t b, std::size_t off, const Vec<K>& v) {
    for (std::size_t r = 0; r < v.size(); ++r)
      if (!v[r].is_zero()) {
        t[a * d + b].emplace_back(off + r, v[r]);
        t[b * d + a].emplace_back(off + r, -v[r]);
      }
  };
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < m; ++j)
      put(i, p + k + j, p, ider_coords(inner_derivation(V, V.basis_vector(Sign::Plus, i), V.basis_vector(Sign::Minus, j))));
  for (std::size_t a = 0; a < k; ++a) {
    const auto& g = ider.basis[a];
    for (std::size_t i = 0; i < p; ++i) put(p + a, i, 0, g[0].column(i));
    for (std::size_t j = 0; j < m; ++j) put(p + a, p + k + j, p + k, g[1].column(j));
    for (std::size_t b = a + 1; b < k; ++b) {
      const auto& h = ider.basis[b];
      put(p + a, p + b, p, ider_coords({g[0] * h[0] - h[0] * g[0], g[1] * h[1] - h[1] * g[1]}));
    }
  }
  std::vector<std::string> names = V.names(Sign::Plus);
  for (std::size_t a = 0; a < k; ++a) names.push_back("d" + std::to_string(a + 1));
  for (const auto& n : V.names(Sign::Minus)) names.push_back(n);
  std::vector<std::int64_t> degrees(p, 1);
  degrees.insert(degrees.end(), k, 0);
  degrees.insert(degrees.end(), m, -1);
  LieAlgebra<K> L(f, std::move(names), std::move(t), GradingGroup::integers(), std::move(degrees));
  return {std::move(L), std::move(ider), p, k, m};
}

/// Id_TKK(I) = I^+ (+) ([I^+, V^-] + [V^+, I^-]) (+) I^-.
template <ExactField K>
IdealHandle<K> id_tkk(const JordanPair<K>& V, const Tkk<K>& T, const SubPair<K>& I) {
  if (!is_pair_ideal(V, I)) throw NotAPairIdeal("id_tkk: not an ideal of the pair");
  const auto& L = T.algebra;
  auto plus = T.part(Sign::Plus, I[Sign::Plus]), minus = T.part(Sign::Minus, I[Sign::Minus]);
  auto vplus = T.part(Sign::Plus, Subspace<K>::full(V.field(), V.dim(Sign::Plus)));
  auto vminus = T.part(Sign::Minus, Subspace<K>::full(V.field(), V.dim(Sign::Minus)));
  auto out = plus.sum(minus).sum(bracket_span(L, plus, vminus)).sum(bracket_span(L, vplus, minus));
  return {out, true};
}

/// Checks Ann_TKK(Id_TKK(I)) = 0 exactly when Ann_V(I) = 0.
template <ExactField K>
bool id_tkk_annihilator_holds(const JordanPair<K>& V, const Tkk<K>& T, const SubPair<K>& I) {
  auto id = id_tkk(V, T, I);
  const bool lie = annihilator(T.algebra, full_space(T.algebra), id.space).is_zero();
  return lie == pair_annihilator(V, I).is_zero();
}

// ---------------------------------------------------------------- associated pairs

template <ExactField K>
struct AssociatedPair {
  JordanPair<K> pair;
  std::vector<std::size_t> plus_index, zero_index, minus_index;  // basis positions in L
  Subspace<K> c_v;                                               // Z(L) cap L_0
  Tkk<K> tkk;
  Matrix<K> canonical_map;  // dim TKK x dim L, identity on L_{+-1}, l -> (ad l|L_1, ad l|L_-1) on L_0
  bool map_is_homomorphism = false;
  bool kernel_is_c_v = false;
  bool surjective = false;

  [[nodiscard]] bool isomorphism_verified() const { return map_is_homomorphism && kernel_is_c_v && surjective; }
};

/// V = (L_1, L_-1) with {x, y, z} = [[x, y], z], and the canonical map L / C_V -> TKK(V).
template <ExactField K>
AssociatedPair<K> associated_pair(const LieAlgebra<K>& L) {
  require_three_graded(L);
  require_jordan_characteristic(L.field());
  const FieldTag f = L.field();
  AssociatedPair<K> out;
  out.plus_index = L.indices_of_degree(1);
  out.zero_index = L.indices_of_degree(0);
  out.minus_index = L.indices_of_degree(-1);
  auto span_of = [&](const std::vector<std::size_t>& idx) {
    std::vector<Vec<K>> g;
    for (auto i : idx) g.push_back(L.basis_vector(i));
    return Subspace<K>::span(f, L.dim(), g);
  };
  auto L1 = span_of(out.plus_index), L0 = span_of(out.zero_index), Lm1 = span_of(out.minus_index);
  if (bracket_span(L, L1, Lm1) != L0) throw NotJordanThreeGraded("[L_1, L_-1] differs from L_0");

  std::array<std::vector<std::string>, 2> names;
  for (auto i : out.plus_index) names[0].push_back(L.names()[i]);
  for (auto i : out.minus_index) names[1].push_back(L.names()[i]);
  std::array<TripleTable<K>, 2> tables;
  const std::array<const std::vector<std::size_t>*, 2> idx = {&out.plus_index, &out.minus_index};
  for (auto s : kSigns) {
    const auto& X = *idx[slot(s)];
    const auto& Y = *idx[slot(flip(s))];
    const std::size_t d = X.size(), e = Y.size();
    auto& t = tables[slot(s)];
    t.assign(d * e * d, {});
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < e; ++j) {
        auto xy = L.bracket_basis(X[i], Y[j]);
        for (std::size_t l = 0; l < d; ++l) {
          auto v = L.bracket(xy, L.basis_vector(X[l]));
          for (std::size_t r = 0; r < d; ++r)
            if (!v[X[r]].is_zero()) t[(i * e + j) * d + l].emplace_back(r, v[X[r]]);
        }
      }
  }
  out.pair = JordanPair<K>(f, std::move(names), std::move(tables));
  out.c_v = center(L).intersect(L0);
  out.tkk = tkk(out.pair);

  const auto& T = out.tkk;
  std::vector<Vec<K>> flat;
  for (const auto& g : T.ider.basis) flat.push_back(flatten_pair_map(g));
  const std::size_t p = out.plus_index.size(), m = out.minus_index.size();
  CoordinateSolver<K> solver(f, p * p + m * m, flat);
  Matrix<K> phi(f, T.algebra.dim(), L.dim());
  for (std::size_t a = 0; a < p; ++a) phi(T.offset(Sign::Plus) + a, out.plus_index[a]) = one_of<K>(f);
  for (std::size_t a = 0; a < m; ++a) phi(T.offset(Sign::Minus) + a, out.minus_index[a]) = one_of<K>(f);
  for (auto z : out.zero_index) {
    Matrix<K> ap(f, p, p), am(f, m, m);
    for (std::size_t c = 0; c < p; ++c) {
      auto v = L.bracket_basis(z, out.plus_index[c]);
      for (std::size_t r = 0; r < p; ++r) ap(r, c) = v[out.plus_index[r]];
    }
    for (std::size_t c = 0; c < m; ++c) {
      auto v = L.bracket_basis(z, out.minus_index[c]);
      for (std::size_t r = 0; r < m; ++r) am(r, c) = v[out.minus_index[r]];
    }
    auto c = solver.solve(flatten_pair_map<K>({ap, am}));
    if (!c) throw InternalError("ad of L_0 is not an inner derivation");
    for (std::size_t r = 0; r < c->size(); ++r) phi(p + r, z) = (*c)[r];
  }
  out.canonical_map = phi;
  out.map_is_homomorphism = true;
  for (std::size_t i = 0; i < L.dim() && out.map_is_homomorphism; ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j)
      if (phi.apply(L.bracket_basis(i, j)) != T.algebra.bracket(phi.column(i), phi.column(j))) {
        out.map_is_homomorphism = false;
        break;
      }
  out.kernel_is_c_v = kernel_basis(phi) == out.c_v;
  out.surjective = phi.rank() == T.algebra.dim();
  return out;
}

}  // namespace gradlie
