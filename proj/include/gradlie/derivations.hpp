#pragma once

// Der(I, L) for an ideal I, solved degree by degree, and the maximal algebra of
// quotients realized as Der(E0, L) on the minimum essential ideal E0.

#include <map>

#include "gradlie/analysis.hpp"

namespace gradlie {

/// Linear maps I -> L as dim L x dim I matrices; column k is the image of the
/// k-th echelon row of I.
template <ExactField K>
struct DerivationSpace {
  Subspace<K> domain;
  std::vector<Matrix<K>> basis;
  std::vector<std::int64_t> degrees;  // per basis map; all 0 when not graded
  bool graded = false;

  [[nodiscard]] std::size_t dim() const noexcept { return basis.size(); }

  /// degree -> dimension, ordered by degree.
  [[nodiscard]] std::map<std::int64_t, std::size_t> component_dims() const {
    std::map<std::int64_t, std::size_t> out;
    for (auto d : degrees) ++out[d];
    return out;
  }

  [[nodiscard]] Vec<K> apply(std::size_t a, const Vec<K>& x) const {
    auto c = domain.coordinates(x);
    if (!c) throw AmbientMismatch("derivation applied outside its domain");
    return basis.at(a).apply(*c);
  }
};

template <ExactField K>
Vec<K> flatten(const Matrix<K>& m) {
  Vec<K> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

template <ExactField K>
Matrix<K> unflatten(FieldTag f, std::size_t rows, std::size_t cols, const Vec<K>& v) {
  Matrix<K> m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
  return m;
}

/// The restriction of ad x to I, in the layout of DerivationSpace.
template <ExactField K>
Matrix<K> restricted_ad(const LieAlgebra<K>& L, const Subspace<K>& I, const Vec<K>& x) {
  std::vector<Vec<K>> cols;
  for (const auto& u : I.basis()) cols.push_back(L.bracket(x, u));
  return Matrix<K>::from_columns(L.field(), L.dim(), cols);
}

namespace detail {

/// Leibniz rows keyed by block degree; unknown (r, k) sits at r * m + k.
template <ExactField K>
std::map<std::int64_t, std::vector<std::map<std::size_t, K>>> leibniz_rows(const LieAlgebra<K>& L,
                                                                          const Subspace<K>& I, bool graded) {
  const std::size_t n = L.dim(), m = I.dim();
  const auto& u = I.basis();
  std::vector<Matrix<K>> ad_u;
  std::vector<std::int64_t> deg_u(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    ad_u.push_back(L.ad(u[i]));
    if (graded) deg_u[i] = *L.degree_of(u[i]);
  }
  std::map<std::int64_t, std::vector<std::map<std::size_t, K>>> blocks;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      auto c = I.coordinates(L.bracket(u[i], u[j]));
      if (!c) throw NotAnIdeal("derivation_space: domain is not closed under the bracket");
      for (std::size_t r = 0; r < n; ++r) {
        std::map<std::size_t, K> row;
        auto put = [&](std::size_t idx, const K& v) {
          auto [it, fresh] = row.try_emplace(idx, v);
          if (!fresh) it->second += v;
        };
        for (std::size_t k = 0; k < m; ++k)
          if (!(*c)[k].is_zero()) put(r * m + k, (*c)[k]);
        for (std::size_t s = 0; s < n; ++s) {
          if (!ad_u[j](r, s).is_zero()) put(s * m + i, ad_u[j](r, s));
          if (!ad_u[i](r, s).is_zero()) put(s * m + j, -ad_u[i](r, s));
        }
        std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
        if (row.empty()) continue;
        std::int64_t sigma = graded ? L.group().sub(L.group().sub(L.degree(r), deg_u[i]), deg_u[j]) : 0;
        blocks[sigma].push_back(std::move(row));
      }
    }
  return blocks;
}

/// Kernel of sparse rows restricted to the listed unknowns; returns full-length vectors.
template <ExactField K>
std::vector<Vec<K>> solve_block(FieldTag f, std::size_t total, const std::vector<std::size_t>& unknowns,
                                const std::vector<std::map<std::size_t, K>>& rows) {
  std::map<std::size_t, std::size_t> local;
  for (std::size_t a = 0; a < unknowns.size(); ++a) local[unknowns[a]] = a;
  std::vector<Vec<K>> dense;
  for (const auto& row : rows) {
    auto v = zero_vector<K>(f, unknowns.size());
    for (const auto& [idx, c] : row) v[local.at(idx)] = c;
    dense.push_back(std::move(v));
  }
  auto ker = kernel_of_rows<K>(f, unknowns.size(), dense);
  std::vector<Vec<K>> out;
  for (const auto& k : ker.basis()) {
    auto v = zero_vector<K>(f, total);
    for (std::size_t a = 0; a < unknowns.size(); ++a) v[unknowns[a]] = k[a];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

/// Der(I, L). When I is graded in a nontrivially graded L the solution is assembled
/// from homogeneous blocks, ordered by degree, and checked against the undecomposed
/// system (DecompositionIncomplete on disagreement).
template <ExactField K>
DerivationSpace<K> derivation_space(const LieAlgebra<K>& L, const IdealHandle<K>& I) {
  if (I.space.ambient_dim() != L.dim()) throw AmbientMismatch("derivation_space: ideal outside L");
  if (!is_ideal(L, I.space)) throw NotAnIdeal("derivation_space: not an ideal");
  const std::size_t n = L.dim(), m = I.space.dim(), total = n * m;
  const FieldTag f = L.field();
  const bool graded = L.group().kind() != GradingGroup::Kind::Trivial && is_graded_subspace(L, I.space);

  DerivationSpace<K> D;
  D.domain = I.space;
  D.graded = graded;

  auto blocks = detail::leibniz_rows(L, I.space, graded);
  if (!graded) {
    std::vector<std::size_t> all(total);
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::map<std::size_t, K>> rows;
    for (auto& [sigma, rs] : blocks) rows.insert(rows.end(), rs.begin(), rs.end());
    for (auto& v : detail::solve_block<K>(f, total, all, rows)) {
      D.basis.push_back(unflatten<K>(f, n, m, v));
      D.degrees.push_back(0);
    }
    return D;
  }

  std::vector<std::int64_t> deg_u;
  for (const auto& u : I.space.basis()) deg_u.push_back(*L.degree_of(u));
  std::map<std::int64_t, std::vector<std::size_t>> unknowns_by_degree;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < m; ++k)
      unknowns_by_degree[L.group().sub(L.degree(r), deg_u[k])].push_back(r * m + k);
  std::size_t graded_total = 0;
  for (const auto& [sigma, unknowns] : unknowns_by_degree) {
    static const std::vector<std::map<std::size_t, K>> none;
    auto it = blocks.find(sigma);
    auto sols = detail::solve_block<K>(f, total, unknowns, it == blocks.end() ? none : it->second);
    for (auto& v : sols) {
      D.basis.push_back(unflatten<K>(f, n, m, v));
      D.degrees.push_back(sigma);
    }
    graded_total += sols.size();
  }
  // cross-check against the undecomposed system
  std::vector<std::size_t> all(total);
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::map<std::size_t, K>> rows;
  for (auto& [sigma, rs] : blocks) rows.insert(rows.end(), rs.begin(), rs.end());
  const auto full = detail::solve_block<K>(f, total, all, rows).size();
  if (full != graded_total)
    throw DecompositionIncomplete("graded components have dimension " + std::to_string(graded_total) +
                                  " but Der has dimension " + std::to_string(full));
  return D;
}

template <ExactField K>
std::map<std::int64_t, std::size_t> graded_derivation_components(const DerivationSpace<K>& D) {
  return D.component_dims();
}

/// Leibniz identity of one map on every basis pair of its domain.
template <ExactField K>
bool satisfies_leibniz(const LieAlgebra<K>& L, const Subspace<K>& I, const Matrix<K>& delta) {
  const auto& u = I.basis();
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) {
      auto c = I.coordinates(L.bracket(u[i], u[j]));
      auto lhs = delta.apply(*c);
      auto rhs = add(L.bracket(delta.column(i), u[j]), L.bracket(u[i], delta.column(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

// ---------------------------------------------------------------- maximal quotients

template <ExactField K>
struct MaximalQuotients {
  LieAlgebra<K> algebra;     // Der(E0, L) with the commutator bracket
  Matrix<K> embedding;       // dim Q x dim L; column i is the coordinate vector of ad b_i restricted to E0
  IdealHandle<K> witness_ideal;  // E0
  DerivationSpace<K> derivations;  // basis aligned with the algebra basis
  bool graded = false;

  [[nodiscard]] bool embedding_bijective() const { return embedding.rows() == embedding.cols() && embedding.rank() == embedding.cols(); }
  [[nodiscard]] Subspace<K> image() const {
    return Subspace<K>::span(algebra.field(), algebra.dim(), embedding.transpose().row_list());
  }
};

/// Q_m(L) (graded = false) or Q_gr-m(L) (graded = true) as Der(E0, L), where E0 is the
/// socle, resp. the graded socle. The basis starts with the images of the basis of L,
/// degree by degree, so a bijective embedding is a degree-sorted relabelling of L.
template <ExactField K>
MaximalQuotients<K> maximal_quotients(const LieAlgebra<K>& L, bool graded = false,
                                      std::uint64_t budget = default_budget()) {
  auto sp = is_semiprime(L, graded, budget);
  if (!sp.is_true()) throw NotSemiprime(sp.decided() ? "L is not semiprime" : "semiprimeness undecided: " + sp.note);
  auto soc = socle(L, graded, budget);
  const auto& E0 = soc.socle.space;
  const FieldTag f = L.field();
  const std::size_t n = L.dim(), m = E0.dim();

  auto D = derivation_space(L, soc.socle);
  for (const auto& delta : D.basis)
    for (std::size_t k = 0; k < m; ++k)
      if (!E0.contains(delta.column(k))) throw InternalError("a derivation leaves E0");

  // choose the basis: images of L first, then completions, one degree at a time
  std::map<std::int64_t, std::vector<std::size_t>> by_degree;
  for (std::size_t a = 0; a < D.dim(); ++a) by_degree[D.degrees[a]].push_back(a);
  std::vector<Matrix<K>> maps;
  std::vector<std::int64_t> degrees;
  std::vector<std::string> names;
  std::size_t extra = 0;
  for (auto& [sigma, idx] : by_degree) {
    auto span = Subspace<K>::zero(f, n * m);
    auto try_add = [&](const Matrix<K>& mat, const std::string& name) {
      if (!span.insert(flatten(mat))) return;
      maps.push_back(mat);
      degrees.push_back(sigma);
      names.push_back(name);
    };
    for (std::size_t i = 0; i < n; ++i)
      if (!D.graded || L.degree(i) == sigma) try_add(restricted_ad(L, E0, L.basis_vector(i)), L.names()[i]);
    for (auto a : idx) try_add(D.basis[a], "q" + std::to_string(++extra));
  }
  const std::size_t d = maps.size();
  if (d != D.dim()) throw InternalError("inner derivations are not homogeneous");

  std::vector<Vec<K>> flat;
  for (const auto& mat : maps) flat.push_back(flatten(mat));
  CoordinateSolver<K> solver(f, n * m, flat);

  // E0-coordinates of each map, so composition happens inside End(E0)
  std::vector<Matrix<K>> onE0;
  for (const auto& mat : maps) {
    Matrix<K> a(f, m, m);
    for (std::size_t k = 0; k < m; ++k) {
      auto c = *E0.coordinates(mat.column(k));
      for (std::size_t r = 0; r < m; ++r) a(r, k) = c[r];
    }
    onE0.push_back(std::move(a));
  }
  auto back = Matrix<K>::from_columns(f, n, E0.basis());  // n x m
  SparseTable<K> t(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      auto comm = back * (onE0[a] * onE0[b] - onE0[b] * onE0[a]);
      auto c = solver.solve(flatten(comm));
      if (!c) throw InternalError("commutator of derivations is not a derivation");
      for (std::size_t k = 0; k < d; ++k)
        if (!(*c)[k].is_zero()) {
          t[a * d + b].emplace_back(k, (*c)[k]);
          t[b * d + a].emplace_back(k, -(*c)[k]);
        }
    }
  GradingGroup group = D.graded ? L.group() : GradingGroup::trivial();
  MaximalQuotients<K> out{LieAlgebra<K>(f, std::move(names), std::move(t), group, degrees), Matrix<K>(f, d, n),
                          soc.socle, D, graded};
  for (std::size_t i = 0; i < n; ++i) {
    auto c = solver.solve(flatten(restricted_ad(L, E0, L.basis_vector(i))));
    for (std::size_t k = 0; k < d; ++k) out.embedding(k, i) = (*c)[k];
  }
  out.derivations.basis = std::move(maps);
  out.derivations.degrees = std::move(degrees);
  return out;
}

/// Checks that the embedding of a MaximalQuotients is a Lie homomorphism acting as ad x on E0.
template <ExactField K>
bool embedding_is_ad(const LieAlgebra<K>& L, const MaximalQuotients<K>& M) {
  for (std::size_t i = 0; i < L.dim(); ++i) {
    auto img = M.embedding.column(i);
    // sum_k img_k * map_k must equal ad b_i on E0
    Matrix<K> acc(L.field(), L.dim(), M.witness_ideal.space.dim());
    for (std::size_t k = 0; k < img.size(); ++k)
      if (!img[k].is_zero()) acc = acc + img[k] * M.derivations.basis[k];
    if (!(acc == restricted_ad(L, M.witness_ideal.space, L.basis_vector(i)))) return false;
    for (std::size_t j = 0; j < L.dim(); ++j)
      if (M.embedding.apply(L.bracket_basis(i, j)) != M.algebra.bracket(img, M.embedding.column(j))) return false;
  }
  return true;
}

// ---------------------------------------------------------------- 3-graded comparison

template <ExactField K>
struct GradedComparisonReport {
  std::map<std::int64_t, std::size_t> qm_components;   // Q_m = Der(E0, L)
  std::map<std::int64_t, std::size_t> qgr_components;  // Q_gr-m = Der(E_gr, L)
  std::size_t qm_dim = 0, qgr_dim = 0;
  bool chain = false;          // E_gr inside ~E0 inside E0
  bool restriction_injective = false;
  bool restriction_bijective = false;
  bool restriction_preserves_bracket = false;
  bool restriction_preserves_degree = false;
  bool within_five_grading = false;  // all degrees in -2..2
  bool outer_components_vanish = false;  // no +-2 components
  std::optional<bool> strongly_nondegenerate;

  [[nodiscard]] bool isomorphic() const {
    return restriction_bijective && restriction_preserves_bracket && restriction_preserves_degree;
  }
};

/// Realizes Q_m(L) -> Q_gr-m(L), delta |-> delta restricted to the minimum graded
/// essential ideal (which sits inside ~E0), and checks it is a graded isomorphism.
template <ExactField K>
GradedComparisonReport<K> compare_graded_quotients(const LieAlgebra<K>& L, std::uint64_t budget = default_budget()) {
  require_three_graded(L);
  GradedComparisonReport<K> r;
  auto qm = maximal_quotients(L, false, budget);
  auto qg = maximal_quotients(L, true, budget);
  r.qm_dim = qm.algebra.dim();
  r.qgr_dim = qg.algebra.dim();
  r.qm_components = qm.derivations.component_dims();
  r.qgr_components = qg.derivations.component_dims();
  if (!qm.derivations.graded) r.qm_components.clear();

  const auto& E0 = qm.witness_ideal.space;
  const auto& Egr = qg.witness_ideal.space;
  auto tilde = lemma31_tilde(L, qm.witness_ideal);
  r.chain = tilde.tilde.space.contains(Egr) && E0.contains(tilde.tilde.space);

  // restriction: delta on E0 -> delta on Egr, in the coordinates of qg's basis
  const FieldTag f = L.field();
  const std::size_t n = L.dim();
  std::vector<Vec<K>> flat;
  for (const auto& mat : qg.derivations.basis) flat.push_back(flatten(mat));
  CoordinateSolver<K> solver(f, n * Egr.dim(), flat);
  Matrix<K> R(f, qg.algebra.dim(), qm.algebra.dim());
  bool ok = true;
  r.restriction_preserves_degree = qm.derivations.graded;
  for (std::size_t a = 0; a < qm.algebra.dim(); ++a) {
    std::vector<Vec<K>> cols;
    for (const auto& u : Egr.basis()) cols.push_back(qm.derivations.apply(a, u));
    auto c = solver.solve(flatten(Matrix<K>::from_columns(f, n, cols)));
    if (!c) {
      ok = false;
      break;
    }
    for (std::size_t k = 0; k < c->size(); ++k) {
      R(k, a) = (*c)[k];
      if (!(*c)[k].is_zero() && qg.derivations.degrees[k] != qm.derivations.degrees[a])
        r.restriction_preserves_degree = false;
    }
  }
  if (ok) {
    const auto rank = R.rank();
    r.restriction_injective = rank == qm.algebra.dim();
    r.restriction_bijective = r.restriction_injective && rank == qg.algebra.dim();
    r.restriction_preserves_bracket = true;
    for (std::size_t a = 0; a < qm.algebra.dim() && r.restriction_preserves_bracket; ++a)
      for (std::size_t b = 0; b < qm.algebra.dim(); ++b)
        if (R.apply(qm.algebra.bracket_basis(a, b)) != qg.algebra.bracket(R.column(a), R.column(b))) {
          r.restriction_preserves_bracket = false;
          break;
        }
  }
  r.within_five_grading = true;
  r.outer_components_vanish = true;
  for (const auto* comps : {&r.qm_components, &r.qgr_components})
    for (const auto& [deg, dim] : *comps) {
      if (deg < -2 || deg > 2) r.within_five_grading = false;
      if ((deg == 2 || deg == -2) && dim > 0) r.outer_components_vanish = false;
    }
  try {
    auto snd = is_strongly_nondegenerate(L, false, budget);
    r.strongly_nondegenerate = snd.value;
  } catch (const DimensionTooLarge&) {
  }
  return r;
}

}  // namespace gradlie
