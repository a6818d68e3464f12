#pragma once

// Pairs of M-quotients and the maximal Jordan pair, triple and algebra of quotients,
// all routed through the TKK algebra and Der(E0, L).

#include "gradlie/jordan.hpp"
#include "gradlie/quotients.hpp"

namespace gradlie {

/// The subpair S of W as a Jordan pair on the echelon bases of S^+ and S^-.
template <ExactField K>
JordanPair<K> induced_pair(const JordanPair<K>& W, const SubPair<K>& S) {
  if (!is_subpair(W, S)) throw NotASubalgebra("not closed under the triple product");
  std::array<std::vector<std::string>, 2> names;
  std::array<TripleTable<K>, 2> tables;
  for (auto s : kSigns) {
    const auto& B = S[s].basis();
    for (std::size_t i = 0; i < B.size(); ++i) {
      std::optional<std::size_t> unit;
      std::size_t nonzero = 0;
      for (std::size_t k = 0; k < B[i].size(); ++k)
        if (!B[i][k].is_zero()) ++nonzero, unit = k;
      const bool is_unit = nonzero == 1 && B[i][*unit].is_one();
      names[slot(s)].push_back(is_unit ? W.names(s)[*unit] : std::string(s == Sign::Plus ? "u" : "v") + std::to_string(i + 1));
    }
  }
  for (auto s : kSigns) {
    const auto &X = S[s].basis(), &Y = S[flip(s)].basis();
    const std::size_t d = X.size(), e = Y.size();
    auto& t = tables[slot(s)];
    t.assign(d * e * d, {});
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < e; ++j)
        for (std::size_t l = 0; l < d; ++l) {
          auto c = *S[s].coordinates(W.triple(s, X[i], Y[j], X[l]));
          for (std::size_t k = 0; k < d; ++k)
            if (!c[k].is_zero()) t[(i * e + j) * d + l].emplace_back(k, c[k]);
        }
  }
  return JordanPair<K>(W.field(), std::move(names), std::move(tables));
}

/// Outcome of the M-quotients decider; `witness_q` is an element of W^sign with no
/// admissible ideal.
template <ExactField K>
struct PairQuotientVerdict {
  Decision<K> decision;
  std::optional<Sign> witness_sign;
  std::optional<Vec<K>> witness_q;
  std::size_t witnesses_checked = 0;

  [[nodiscard]] bool verified_on_witnesses() const {
    return !decision.decided() && decision.method == Method::PerWitness;
  }
};

/// D(q): the largest ideal of S inside the subpair of elements whose products with q fall back into S.
template <ExactField K>
SubPair<K> m_denominator(const JordanPair<K>& W, const SubPair<K>& S, Sign s, const Vec<K>& q) {
  const Sign m = flip(s);
  SubPair<K> A = S;
  A[m] = detail::kernel_within<K>(S[m], [&](const Vec<K>& y) {
    Vec<K> r;
    for (const auto& v : S[s].basis()) detail::append(r, S[s].reduce(W.triple(s, q, y, v)));
    for (const auto& w : S[m].basis()) detail::append(r, S[m].reduce(W.triple(m, y, q, w)));
    return r;
  });
  A[s] = detail::kernel_within<K>(S[s], [&](const Vec<K>& x) {
    Vec<K> r;
    for (const auto& w : S[m].basis()) detail::append(r, S[s].reduce(W.triple(s, q, w, x)));
    return r;
  });
  return largest_pair_ideal_in(W, std::move(A), S);
}

/// q satisfies the definition with I = D(q); any admissible ideal lies in D(q), so this is exact.
template <ExactField K>
bool m_absorbed(const JordanPair<K>& W, const SubPair<K>& S, Sign s, const Vec<K>& q) {
  const Sign m = flip(s);
  auto D = m_denominator(W, S, s, q);
  if (!pair_annihilator(W, D, S).is_zero()) return false;
  for (const auto& y : D[m].basis())
    for (const auto& v : S[s].basis())
      if (!is_zero_vector(W.triple(s, q, y, v))) return true;
  for (const auto& w : S[m].basis())
    for (const auto& x : D[s].basis())
      if (!is_zero_vector(W.triple(s, q, w, x))) return true;
  for (const auto& y : D[m].basis())
    for (const auto& w : S[m].basis())
      if (!is_zero_vector(W.triple(m, y, q, w))) return true;
  return false;
}

/// S_L = S^+ (+) [S^+, S^-] (+) S^- inside TKK(W), when it is a copy of TKK(S).
template <ExactField K>
std::optional<QuotientEmbedding<K>> tkk_inclusion(const JordanPair<K>& W, const SubPair<K>& S) {
  auto T = tkk(W);
  auto plus = T.part(Sign::Plus, S[Sign::Plus]), minus = T.part(Sign::Minus, S[Sign::Minus]);
  auto SL = plus.sum(minus).sum(bracket_span(T.algebra, plus, minus));
  auto V = induced_pair(W, S);
  if (SL.dim() != tkk(V).algebra.dim()) return std::nullopt;
  return QuotientEmbedding<K>(T.algebra, SL);
}

/// W is a pair of M-quotients of the subpair S. Exhaustive over F_p; over Q every basis
/// vector is tested and TKK(W) over TKK(S) settles the rest when the Lie decider can.
template <ExactField K>
PairQuotientVerdict<K> is_pair_of_M_quotients(const JordanPair<K>& W, const SubPair<K>& S,
                                              std::uint64_t budget = default_budget()) {
  auto V = induced_pair(W, S);
  auto sp = pair_is_semiprime(V, budget);
  if (!sp.is_true()) throw NotSemiprime(sp.decided() ? "V is not semiprime" : "semiprimeness undecided: " + sp.note);
  PairQuotientVerdict<K> v;
  auto fail = [&](Sign s, const Vec<K>& q, Method m) {
    v.witness_sign = s;
    v.witness_q = q;
    v.decision = Decision<K>::no(m, pair_vector(W, s, q));
    return v;
  };
  for (auto s : kSigns)
    for (std::size_t i = 0; i < W.dim(s); ++i) {
      ++v.witnesses_checked;
      if (!m_absorbed(W, S, s, W.basis_vector(s, i))) return fail(s, W.basis_vector(s, i), Method::PerWitness);
    }
  if constexpr (std::is_same_v<K, Fp>) {
    const std::uint64_t p = W.field().characteristic;
    const auto total = field_size_power(p, W.dim(Sign::Plus)) + field_size_power(p, W.dim(Sign::Minus));
    if (total > budget)
      throw DimensionTooLarge("M-quotients scan of " + std::to_string(total) + " elements exceeds the budget of " +
                              std::to_string(budget));
    for (auto s : kSigns) {
      std::optional<Vec<Fp>> bad;
      for_each_projective(W.field(), W.dim(s), [&](const Vec<Fp>& q) {
        ++v.witnesses_checked;
        if (!m_absorbed(W, S, s, q)) bad = q;
        return !bad;
      });
      if (bad) return fail(s, *bad, Method::ExhaustiveFp);
    }
    v.decision = Decision<K>::yes(Method::ExhaustiveFp);
    return v;
  } else {
    try {
      if (auto E = tkk_inclusion(W, S)) {
        auto lie = is_quotient(*E, false, budget);
        if (lie.decision.decided()) {
          v.decision = lie.decision.is_true()
                           ? Decision<K>::yes(Method::Structural, "TKK(W) is an algebra of quotients of TKK(V)")
                           : Decision<K>::no(Method::Structural, std::nullopt, "TKK(W) is not an algebra of quotients of TKK(V)");
          return v;
        }
      }
    } catch (const NonzeroCenter&) {
    }
    v.decision = Decision<K>::undecided(Method::PerWitness, "every basis vector of W is absorbed");
    return v;
  }
}

template <ExactField K>
PairQuotientVerdict<K> is_pair_of_M_quotients(const JordanPair<K>& W, std::uint64_t budget = default_budget()) {
  return is_pair_of_M_quotients(W, full_subpair(W), budget);
}

/// The degree +-1 parts of a graded ideal of TKK(V), as a subpair of V.
template <ExactField K>
SubPair<K> pair_part(const Tkk<K>& T, const Subspace<K>& I) {
  SubPair<K> out;
  for (auto s : kSigns) {
    const std::size_t n = s == Sign::Plus ? T.plus_dim : T.minus_dim;
    auto part = I.intersect(T.part(s, Subspace<K>::full(T.algebra.field(), n)));
    std::vector<Vec<K>> gens;
    for (const auto& b : part.basis()) gens.push_back(T.restrict_to(s, b));
    out[s] = Subspace<K>::span(T.algebra.field(), n, gens);
  }
  return out;
}

// ---------------------------------------------------------------- maximal quotients

template <ExactField K>
struct MaximalPairQuotients {
  JordanPair<K> pair;
  std::array<Matrix<K>, 2> embedding;  // dim Q^s x dim V^s
  MaximalQuotients<K> lie;             // Q_m(TKK(V))
  Tkk<K> tkk;
  bool products_preserved = false;
  PairQuotientVerdict<K> verdict;      // Q_m(V) over the image of V

  [[nodiscard]] SubPair<K> image() const {
    SubPair<K> out;
    for (auto s : kSigns)
      out[s] = Subspace<K>::span(pair.field(), pair.dim(s), embedding[slot(s)].transpose().row_list());
    return out;
  }
  [[nodiscard]] bool is_identity() const { return pair.dim(Sign::Plus) == embedding[0].cols() && pair.dim(Sign::Minus) == embedding[1].cols(); }
};

namespace detail {

template <ExactField K>
void require_strongly_nondegenerate(const JordanPair<K>& V, std::uint64_t budget) {
  auto sn = pair_is_strongly_nondegenerate(V, budget);
  if (sn.is_false()) throw NotStronglyNondegenerate("V has a nonzero absolute zero divisor");
  if (!sn.decided()) throw Undecided("strong nondegeneracy undecided: " + sn.note);
}

/// Jordan pair on the degree +-1 parts of Q with {x, y, z} = [[x, theta y], z]; theta = identity
/// gives the associated pair.
template <ExactField K>
std::array<TripleTable<K>, 2> graded_triple_tables(const LieAlgebra<K>& Q, const std::array<std::vector<std::size_t>, 2>& idx) {
  std::array<TripleTable<K>, 2> tables;
  for (auto s : kSigns) {
    const auto& X = idx[slot(s)];
    const auto& Y = idx[slot(flip(s))];
    const std::size_t d = X.size(), e = Y.size();
    auto& t = tables[slot(s)];
    t.assign(d * e * d, {});
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < e; ++j) {
        auto xy = Q.bracket_basis(X[i], Y[j]);
        for (std::size_t l = 0; l < d; ++l) {
          auto v = Q.bracket(xy, Q.basis_vector(X[l]));
          for (std::size_t r = 0; r < d; ++r)
            if (!v[X[r]].is_zero()) t[(i * e + j) * d + l].emplace_back(r, v[X[r]]);
        }
      }
  }
  return tables;
}

}  // namespace detail

/// Q_m(V) = (Q_m(TKK(V))_1, Q_m(TKK(V))_-1) for strongly nondegenerate V.
template <ExactField K>
MaximalPairQuotients<K> maximal_pair_quotients(const JordanPair<K>& V, std::uint64_t budget = default_budget()) {
  detail::require_strongly_nondegenerate(V, budget);
  const FieldTag f = V.field();
  auto T = tkk(V);
  auto M = maximal_quotients(T.algebra, true, budget);
  const auto& Q = M.algebra;
  std::array<std::vector<std::size_t>, 2> idx = {Q.indices_of_degree(1), Q.indices_of_degree(-1)};
  std::array<std::vector<std::string>, 2> names;
  for (auto s : kSigns)
    for (auto i : idx[slot(s)]) names[slot(s)].push_back(Q.names()[i]);
  JordanPair<K> P(f, std::move(names), detail::graded_triple_tables(Q, idx));

  std::array<Matrix<K>, 2> emb;
  for (auto s : kSigns) {
    const auto& X = idx[slot(s)];
    Matrix<K> e(f, X.size(), V.dim(s));
    for (std::size_t i = 0; i < V.dim(s); ++i) {
      auto col = M.embedding.column(T.offset(s) + i);
      for (std::size_t r = 0; r < X.size(); ++r) e(r, i) = col[X[r]];
    }
    emb[slot(s)] = std::move(e);
  }
  MaximalPairQuotients<K> out{std::move(P), std::move(emb), std::move(M), std::move(T), false, {}};
  out.products_preserved = true;
  for (auto s : kSigns) {
    const Sign m = flip(s);
    const auto &es = out.embedding[slot(s)], &em = out.embedding[slot(m)];
    for (std::size_t i = 0; i < V.dim(s) && out.products_preserved; ++i)
      for (std::size_t j = 0; j < V.dim(m) && out.products_preserved; ++j)
        for (std::size_t l = 0; l < V.dim(s); ++l)
          if (es.apply(V.triple_basis(s, i, j, l)) != out.pair.triple(s, es.column(i), em.column(j), es.column(l))) {
            out.products_preserved = false;
            break;
          }
  }
  if (!out.products_preserved) throw InternalError("V does not embed in Q_m(V)");
  out.verdict = is_pair_of_M_quotients(out.pair, out.image(), budget);
  return out;
}

template <ExactField K>
struct MaximalTripleQuotients {
  JordanTriple<K> triple;
  Matrix<K> embedding;  // dim Q x dim T
  bool products_preserved = false;
  PairQuotientVerdict<K> verdict;  // on the double pairs

  [[nodiscard]] bool is_identity() const { return triple.dim() == embedding.cols(); }
};

/// Q_m(T) = Q_m(TKK(V(T)))_1 with {x, y, z} = [[x, theta y], z], theta the exchange
/// automorphism extended to Der(E0, L) by conjugation.
template <ExactField K>
MaximalTripleQuotients<K> maximal_triple_quotients(const JordanTriple<K>& T3, std::uint64_t budget = default_budget()) {
  auto V = T3.double_pair();
  detail::require_strongly_nondegenerate(V, budget);
  const FieldTag f = V.field();
  const std::size_t d = T3.dim();
  auto T = tkk(V);
  const auto& L = T.algebra;
  const std::size_t n = L.dim();

  // exchange automorphism of TKK(V(T)): x+ <-> x-, (g+, g-) -> (g-, g+)
  std::vector<Vec<K>> flat;
  for (const auto& g : T.ider.basis) flat.push_back(flatten_pair_map(g));
  CoordinateSolver<K> ider_solver(f, 2 * d * d, flat);
  Matrix<K> theta(f, n, n);
  for (std::size_t i = 0; i < d; ++i) {
    theta(T.offset(Sign::Minus) + i, T.offset(Sign::Plus) + i) = one_of<K>(f);
    theta(T.offset(Sign::Plus) + i, T.offset(Sign::Minus) + i) = one_of<K>(f);
  }
  for (std::size_t a = 0; a < T.zero_dim; ++a) {
    const auto& g = T.ider.basis[a];
    auto c = ider_solver.solve(flatten_pair_map<K>({g[1], g[0]}));
    if (!c) throw InternalError("exchange does not preserve IDer");
    for (std::size_t r = 0; r < c->size(); ++r) theta(T.plus_dim + r, T.plus_dim + a) = (*c)[r];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (theta.apply(L.bracket_basis(i, j)) != L.bracket(theta.column(i), theta.column(j)))
        throw InternalError("exchange map is not an automorphism of TKK");

  auto M = maximal_quotients(L, true, budget);
  const auto& Q = M.algebra;
  const auto& E0 = M.witness_ideal.space;
  const std::size_t m = E0.dim(), q = Q.dim();
  Matrix<K> theta_e0(f, m, m);
  for (std::size_t k = 0; k < m; ++k) {
    auto c = E0.coordinates(theta.apply(E0.basis()[k]));
    if (!c) throw InternalError("socle is not exchange invariant");
    for (std::size_t r = 0; r < m; ++r) theta_e0(r, k) = (*c)[r];
  }
  std::vector<Vec<K>> dflat;
  for (const auto& u : M.derivations.basis) dflat.push_back(flatten(u));
  CoordinateSolver<K> der_solver(f, n * m, dflat);
  Matrix<K> theta_q(f, q, q);
  for (std::size_t a = 0; a < q; ++a) {
    auto c = der_solver.solve(flatten(theta * M.derivations.basis[a] * theta_e0));
    if (!c) throw InternalError("conjugated derivation left Der(E0, L)");
    for (std::size_t r = 0; r < q; ++r) theta_q(r, a) = (*c)[r];
  }

  const auto plus = Q.indices_of_degree(1);
  const std::size_t e = plus.size();
  auto to_minus = [&](const Vec<K>& y) {  // y in Q_1 coordinates -> theta y in Q
    auto full = zero_vector<K>(f, q);
    for (std::size_t r = 0; r < e; ++r) full[plus[r]] = y[r];
    return theta_q.apply(full);
  };
  TripleTable<K> t(e * e * e);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) {
      auto xy = Q.bracket(Q.basis_vector(plus[i]), to_minus(unit_vector<K>(f, e, j)));
      for (std::size_t l = 0; l < e; ++l) {
        auto v = Q.bracket(xy, Q.basis_vector(plus[l]));
        for (std::size_t r = 0; r < e; ++r)
          if (!v[plus[r]].is_zero()) t[(i * e + j) * e + l].emplace_back(r, v[plus[r]]);
      }
    }
  std::vector<std::string> names;
  for (auto i : plus) names.push_back(Q.names()[i]);
  MaximalTripleQuotients<K> out{JordanTriple<K>(f, std::move(names), std::move(t)), Matrix<K>(f, e, d), false, {}};
  for (std::size_t i = 0; i < d; ++i) {
    auto col = M.embedding.column(T.offset(Sign::Plus) + i);
    for (std::size_t r = 0; r < e; ++r) out.embedding(r, i) = col[plus[r]];
  }
  out.products_preserved = true;
  const auto P = out.triple.double_pair(false);
  for (std::size_t i = 0; i < d && out.products_preserved; ++i)
    for (std::size_t j = 0; j < d && out.products_preserved; ++j)
      for (std::size_t l = 0; l < d; ++l)
        if (out.embedding.apply(V.triple_basis(Sign::Plus, i, j, l)) !=
            P.triple(Sign::Plus, out.embedding.column(i), out.embedding.column(j), out.embedding.column(l))) {
          out.products_preserved = false;
          break;
        }
  if (!out.products_preserved) throw InternalError("T does not embed in Q_m(T)");
  auto image = Subspace<K>::span(f, e, out.embedding.transpose().row_list());
  out.verdict = is_pair_of_M_quotients(P, SubPair<K>{{image, image}}, budget);
  return out;
}

template <ExactField K>
struct MaximalJordanAlgebraQuotients {
  MaximalTripleQuotients<K> triple;          // Q_m(J_T)
  std::optional<JordanAlgebra<K>> algebra;   // x o y = 1/2 {x, 1, y} when J is unital
};

template <ExactField K>
MaximalJordanAlgebraQuotients<K> maximal_jordan_algebra_quotients(const JordanAlgebra<K>& J,
                                                                  std::uint64_t budget = default_budget()) {
  MaximalJordanAlgebraQuotients<K> out{maximal_triple_quotients(triple_of_algebra(J), budget), std::nullopt};
  auto u = J.unit();
  if (!u) return out;
  const auto& Tq = out.triple.triple;
  const FieldTag f = J.field();
  const std::size_t e = Tq.dim();
  auto one = out.triple.embedding.apply(*u);
  const K h = K::from_int(f, 2).inverse();
  SparseTable<K> t(e * e);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) {
      auto v = scaled(Tq.triple(unit_vector<K>(f, e, i), one, unit_vector<K>(f, e, j)), h);
      for (std::size_t k = 0; k < e; ++k)
        if (!v[k].is_zero()) t[i * e + j].emplace_back(k, v[k]);
    }
  out.algebra = JordanAlgebra<K>(f, Tq.names(), std::move(t));
  return out;
}

}  // namespace gradlie
