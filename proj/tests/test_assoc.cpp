#include <gtest/gtest.h>

#include "gradlie/analysis.hpp"
#include "gradlie/gallery_assoc.hpp"

using namespace gradlie;
namespace g = gradlie::gallery;

namespace {

const FieldTag QQ = FieldTag::rationals();
const FieldTag F5 = FieldTag::prime(5);

Rational q(long long v) { return Rational::from_int(QQ, v); }

// Plain matrix product on row-major n x n coefficient vectors, used as an oracle.
Vec<Rational> matmul(const Vec<Rational>& a, const Vec<Rational>& b, std::size_t n) {
  auto c = zero_vector<Rational>(QQ, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
  return c;
}

AssocAlgebra<Rational> diagonal2() {
  SparseTable<Rational> t(4);
  t[0] = {{0, q(1)}};
  t[3] = {{1, q(1)}};
  return AssocAlgebra<Rational>(QQ, {"d1", "d2"}, t, GradingGroup::trivial(), {}, Matrix<Rational>::identity(QQ, 2));
}

// M_2 with deg e_ij = i - j, no involution.
AssocAlgebra<Rational> m2_graded() {
  auto M = g::m_n_transpose<Rational>(QQ, 2);
  return AssocAlgebra<Rational>(QQ, M.names(), M.table(), GradingGroup::integers(), {0, -1, 1, 0});
}

}  // namespace

TEST(AssocAlgebra, MatrixUnitsMatchMatrixProduct) {
  for (std::size_t n : {2u, 3u}) {
    auto M = g::m_n_transpose<Rational>(QQ, n);
    for (std::size_t i = 0; i < n * n; ++i)
      for (std::size_t j = 0; j < n * n; ++j)
        EXPECT_EQ(M.multiply(M.basis_vector(i), M.basis_vector(j)), matmul(M.basis_vector(i), M.basis_vector(j), n));
  }
}

TEST(AssocAlgebra, ValidationWitnesses) {
  SparseTable<Rational> t(4);
  t[0 * 2 + 0] = {{1, q(1)}};  // a a = b, b anything else zero, then (aa)a = 0 but a(aa) = 0: associative
  EXPECT_NO_THROW(AssocAlgebra<Rational>(QQ, {"a", "b"}, t, GradingGroup::trivial(), {}));
  t[0 * 2 + 1] = {{0, q(1)}};  // a b = a but b a = 0: (aa)a = ba = 0, a(aa) = ab = a
  EXPECT_THROW(AssocAlgebra<Rational>(QQ, {"a", "b"}, t, GradingGroup::trivial(), {}), AssociativityViolation);

  auto M = g::m_n_transpose<Rational>(QQ, 2);
  try {
    AssocAlgebra<Rational>(QQ, M.names(), M.table(), GradingGroup::trivial(), {}, Matrix<Rational>::identity(QQ, 4));
    FAIL() << "identity is not an anti-automorphism of M_2";
  } catch (const InvolutionViolation& e) {
    EXPECT_NE(std::string(e.what()).find("InvolutionViolation("), std::string::npos);
  }
  EXPECT_THROW(AssocAlgebra<Rational>(QQ, M.names(), M.table(), GradingGroup::integers(), {0, 1, 1, 0}),
               GradingViolation);
  // transpose swaps degrees 1 and -1, so it cannot be a graded involution here
  EXPECT_THROW(AssocAlgebra<Rational>(QQ, M.names(), M.table(), GradingGroup::integers(), {0, -1, 1, 0},
                                      M.involution()),
               InvolutionViolation);
  EXPECT_THROW(skew_elements(m2_graded()), NoInvolution);
}

TEST(MinusAlgebra, M2Bracket) {
  auto L = minus_algebra(g::m_n_transpose<Rational>(QQ, 2));
  EXPECT_EQ(L.bracket_basis(0, 1), L.basis_vector(1));  // [e11, e12] = e12
  auto M = g::m_n_transpose<Rational>(QQ, 2);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_EQ(L.bracket_basis(i, j), sub(matmul(M.basis_vector(i), M.basis_vector(j), 2),
                                           matmul(M.basis_vector(j), M.basis_vector(i), 2)));
}

TEST(MinusAlgebra, CommutativeGivesAbelian) {
  auto L = minus_algebra(diagonal2());
  EXPECT_EQ(center(L).dim(), 2u);
}

TEST(MinusAlgebra, GradingPreserved) {
  auto A = m2_graded();
  auto L = minus_algebra(A);
  EXPECT_EQ(L.degrees(), A.degrees());
  EXPECT_EQ(L.group(), A.group());
}

TEST(SkewElements, Examples) {
  auto M3 = g::m_n_transpose<Rational>(QQ, 3);
  auto k3 = skew_elements(M3);
  EXPECT_EQ(k3.dim(), 3u);
  auto so3 = induced_subalgebra(minus_algebra(M3), k3);
  EXPECT_EQ(center(so3).dim(), 0u);
  EXPECT_FALSE(killing_determinant(so3).is_zero());

  auto M2 = g::m_n_transpose<Rational>(QQ, 2);
  auto k2 = skew_elements(M2);
  Vec<Rational> w = {q(0), q(1), q(-1), q(0)};
  EXPECT_EQ(k2, Subspace<Rational>::span(QQ, 4, {w}));

  EXPECT_TRUE(skew_elements(diagonal2()).is_zero());
}

TEST(SkewElements, BracketClosed) {
  auto M2 = g::m_n_transpose<Rational>(QQ, 2);
  std::vector<AssocAlgebra<Rational>> algebras = {M2, g::m_n_transpose<Rational>(QQ, 3),
                                                 g::assoc_direct_sum(M2, M2), exchange_double(M2)};
  for (const auto& A : algebras) {
    auto k = skew_elements(A);
    for (const auto& x : k.basis())
      for (const auto& y : k.basis()) EXPECT_TRUE(k.contains(A.commutator(x, y)));
    EXPECT_TRUE(is_subalgebra(minus_algebra(A), k));
  }
}

TEST(CentralQuotient, Examples) {
  auto M3 = g::m_n_transpose<Rational>(QQ, 3);
  auto k = central_quotient_pipeline(M3, LieVariant::Skew);
  EXPECT_EQ(k.center.dim(), 0u);
  EXPECT_EQ(k.quotient.algebra.dim(), 3u);

  auto M2 = g::m_n_transpose<Rational>(QQ, 2);
  auto m = central_quotient_pipeline(M2, LieVariant::Minus);
  EXPECT_EQ(m.center.dim(), 1u);
  EXPECT_EQ(m.quotient.algebra.dim(), 3u);

  auto d = central_quotient_pipeline(M2, LieVariant::Derived);
  EXPECT_EQ(d.center.dim(), 0u);
  EXPECT_EQ(d.algebra.dim(), 3u);
  // trace-zero oracle
  for (const auto& v : d.space.basis()) EXPECT_EQ(v[0] + v[3], q(0));

  // so_3 is perfect, so [K,K] = K
  EXPECT_EQ(central_quotient_pipeline(M3, LieVariant::SkewDerived).space, k.space);
}

TEST(ExchangeDouble, IsomorphismWithMinus) {
  EXPECT_TRUE(exchange_isomorphism_holds(g::m_n_transpose<Rational>(QQ, 2)));
  EXPECT_TRUE(exchange_isomorphism_holds(g::m_n_transpose<Rational>(QQ, 3)));
  EXPECT_TRUE(exchange_isomorphism_holds(m2_graded()));
  EXPECT_TRUE(exchange_isomorphism_holds(g::m_n_transpose<Fp>(F5, 2)));
  auto D = exchange_double(m2_graded());
  EXPECT_EQ(D.dim(), 8u);
  EXPECT_TRUE(D.has_involution());
}

TEST(AssocQuotientTransfer, ReflexiveInstances) {
  auto M3 = g::m_n_transpose<Rational>(QQ, 3);
  auto r = theorem28_check(M3, Subspace<Rational>::full(QQ, 9), LieVariant::Skew);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.quotient_q_dim, 3u);

  auto M2 = g::m_n_transpose<Rational>(QQ, 2);
  auto m = theorem28_check(M2, Subspace<Rational>::full(QQ, 4), LieVariant::Minus);
  EXPECT_TRUE(m.via_exchange);
  EXPECT_TRUE(m.exchange_isomorphism);
  EXPECT_EQ(m.lie_q_dim, 4u);
  EXPECT_EQ(m.center_q_dim, 1u);
  EXPECT_TRUE(m.passed());

  auto d = theorem28_check(M2, Subspace<Rational>::full(QQ, 4), LieVariant::Derived);
  EXPECT_TRUE(d.passed());
}

TEST(AssocQuotientTransfer, BlockDiagonalRunsDecider) {
  auto M2 = g::m_n_transpose<Rational>(QQ, 2);
  auto Q = g::assoc_direct_sum(M2, M2);
  auto A = g::block_diagonal_subalgebra<Rational>(QQ);
  ASSERT_TRUE(is_star_subalgebra(Q, A));
  auto r = theorem28_check(Q, A, LieVariant::Minus);
  EXPECT_EQ(r.a_dim, 6u);
  EXPECT_EQ(r.lie_q_dim, 8u);
  if (r.center_compatible) {
    ASSERT_TRUE(r.verdict.has_value());
    EXPECT_TRUE(r.verdict->decision.decided());
  }
}

TEST(AssocQuotientTransfer, RejectsNonSubalgebra) {
  auto M2 = g::m_n_transpose<Rational>(QQ, 2);
  auto s = Subspace<Rational>::span(QQ, 4, {M2.basis_vector(1)});
  EXPECT_THROW(theorem28_check(M2, s, LieVariant::Skew), NotASubalgebra);
}
