#include <gtest/gtest.h>

#include "gradlie/gallery_lie.hpp"

using namespace gradlie;
namespace g = gradlie::gallery;

namespace {

const FieldTag QQ = FieldTag::rationals();
const FieldTag F5 = FieldTag::prime(5);

Rational q(long long n) { return Rational::from_int(QQ, n); }
Vec<Rational> e(std::size_t n, std::size_t i) { return unit_vector<Rational>(QQ, n, i); }

// Structure constants of sl2 by explicit 2x2 matrix commutators, independent of the gallery.
std::vector<std::vector<long long>> mat_commutator(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<std::vector<long long>> c(2, std::vector<long long>(2, 0));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) c[i][j] += a[i * 2 + k] * b[k * 2 + j] - b[i * 2 + k] * a[k * 2 + j];
  return c;
}

}  // namespace

TEST(ConstructLie, Sl2Accepted) {
  auto L = g::sl2<Rational>(QQ);
  EXPECT_EQ(L.dim(), 3u);
  EXPECT_NO_THROW(L.validate());
}

TEST(ConstructLie, AntisymmetryViolation) {
  SparseTable<Rational> t(9);
  t[0 * 3 + 1] = {{2, q(1)}};
  t[1 * 3 + 0] = {{2, q(1)}};
  EXPECT_THROW(LieAlgebra<Rational>(QQ, {"x", "y", "z"}, t, GradingGroup::trivial(), {}), AntisymmetryViolation);
}

TEST(ConstructLie, GradingViolationNamesTriple) {
  auto ok = g::sl2<Rational>(QQ);
  try {
    LieAlgebra<Rational>(QQ, ok.names(), ok.table(), GradingGroup::integers(), {1, -1, 1});
    FAIL() << "expected GradingViolation";
  } catch (const GradingViolation& err) {
    EXPECT_NE(std::string(err.what()).find("e12,e21"), std::string::npos) << err.what();
  }
}

TEST(ConstructLie, JacobiViolationNamesTriple) {
  auto ok = g::sl2<Rational>(QQ);
  auto t = ok.table();
  // flip [h, e] = 2e to -2e on both orientations
  t[2 * 3 + 0] = {{0, q(-2)}};
  t[0 * 3 + 2] = {{0, q(2)}};
  try {
    LieAlgebra<Rational>(QQ, ok.names(), t, GradingGroup::trivial(), {});
    FAIL() << "expected JacobiViolation";
  } catch (const JacobiViolation& err) {
    EXPECT_EQ(std::string(err.what()), "JacobiViolation(e12,e21,h)");
  }
}

TEST(Bracket, Sl2MatchesMatrixCommutators) {
  auto L = g::sl2<Rational>(QQ);
  const std::vector<std::vector<long long>> mats = {{0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, -1}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      auto c = mat_commutator(mats[i], mats[j]);
      // coordinates in (e12, e21, h): c = a e12 + b e21 + t h
      Vec<Rational> want = {q(c[0][1]), q(c[1][0]), q(c[0][0])};
      EXPECT_EQ(L.bracket(e(3, i), e(3, j)), want) << i << "," << j;
    }
  EXPECT_EQ(L.bracket(e(3, 0), e(3, 1)), e(3, 2));
}

TEST(Bracket, AlternatingOnRandomVectors) {
  auto L = g::sln_e11<Rational>(QQ, 3);
  for (int s = 0; s < 10; ++s) {
    Vec<Rational> x;
    for (std::size_t i = 0; i < L.dim(); ++i) x.push_back(q((s * 7 + static_cast<long long>(i) * 3) % 5 - 2));
    EXPECT_TRUE(is_zero_vector(L.bracket(x, x)));
  }
}

TEST(Bracket, HeisenbergTableLookup) {
  auto H = g::heis3<Rational>(QQ);
  EXPECT_TRUE(is_zero_vector(H.bracket(e(3, 0), e(3, 2))));
  EXPECT_EQ(H.bracket(e(3, 0), e(3, 1)), e(3, 2));
  EXPECT_THROW((void)H.bracket(e(2, 0), e(3, 1)), DimensionMismatch);
}

TEST(IdealGenerated, Examples) {
  auto L = g::sl2<Rational>(QQ);
  EXPECT_TRUE(ideal_generated(L, {e(3, 0)}).space.is_full());
  auto H = g::heis3<Rational>(QQ);
  auto z = ideal_generated(H, {e(3, 2)});
  EXPECT_EQ(z.space, Subspace<Rational>::span(QQ, 3, {e(3, 2)}));
  EXPECT_TRUE(ideal_generated(L, {}).space.is_zero());
}

TEST(IdealGenerated, Idempotent) {
  auto L = g::sln_e11<Rational>(QQ, 3);
  auto H = g::heis3<Rational>(QQ);
  for (std::size_t i = 0; i < 3; ++i) {
    auto I = ideal_generated(H, {e(3, i)});
    EXPECT_EQ(ideal_generated(H, I.space.basis()).space, I.space);
  }
  auto I = ideal_generated(L, {e(8, 0)});
  EXPECT_EQ(ideal_generated(L, I.space.basis()).space, I.space);
}

TEST(Annihilator, Examples) {
  auto L = g::sl2<Rational>(QQ);
  EXPECT_TRUE(center(L).is_zero());
  auto H = g::heis3<Rational>(QQ);
  EXPECT_EQ(center(H), Subspace<Rational>::span(QQ, 3, {e(3, 2)}));
  EXPECT_TRUE(annihilator(L, full_space(L), zero_space(L)).is_full());
}

TEST(QuadraticAnnihilator, Examples) {
  auto H = g::heis3<Rational>(QQ);
  EXPECT_TRUE(is_in_quadratic_annihilator(H, e(3, 2), full_space(H)));
  auto L = g::sl2<Rational>(QQ);
  EXPECT_FALSE(is_in_quadratic_annihilator(L, e(3, 2), full_space(L)));
  EXPECT_TRUE(is_in_quadratic_annihilator(L, zero_vector<Rational>(QQ, 3), full_space(L)));
}

TEST(HomogeneousDecompose, Examples) {
  auto L = g::sl2<Rational>(QQ);
  auto parts = homogeneous_decompose(L, add(e(3, 0), e(3, 2)));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts.at(1), e(3, 0));
  EXPECT_EQ(parts.at(0), e(3, 2));
  EXPECT_TRUE(homogeneous_decompose(L, zero_vector<Rational>(QQ, 3)).empty());
  auto A = g::abelian<Rational>(QQ, 2);
  auto one = homogeneous_decompose(A, Vec<Rational>{q(1), q(2)});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.begin()->second, (Vec<Rational>{q(1), q(2)}));
}

TEST(Quotient, HeisenbergByCenter) {
  auto H = g::heis3<Rational>(QQ);
  auto Z = make_ideal(H, center(H));
  auto Qt = quotient_by_ideal(H, Z);
  EXPECT_EQ(Qt.algebra.dim(), 2u);
  EXPECT_TRUE(center(Qt.algebra).is_full());
}

TEST(Quotient, Sl2ByZero) {
  auto L = g::sl2<Rational>(QQ);
  auto Qt = quotient_by_ideal(L, make_ideal(L, zero_space(L)));
  EXPECT_EQ(Qt.algebra.table(), L.table());
  EXPECT_EQ(Qt.algebra.degrees(), L.degrees());
}

TEST(Quotient, Gl2ByScalars) {
  auto G = g::gl2<Rational>(QQ);
  auto Z = center(G);
  ASSERT_EQ(Z.dim(), 1u);
  auto Qt = quotient_by_ideal(G, make_ideal(G, Z));
  EXPECT_EQ(Qt.algebra.dim(), 3u);
  EXPECT_TRUE(center(Qt.algebra).is_zero());
}

TEST(Quotient, ProjectionIsHomomorphism) {
  auto L = g::sln_e11<Rational>(QQ, 3);
  auto H = g::heis3<Rational>(QQ);
  for (const auto* A : {&L, &H}) {
    auto I = ideal_generated(*A, {A->basis_vector(A->dim() - 1)});
    if (I.space.is_full()) I = make_ideal(*A, zero_space(*A));
    auto Qt = quotient_by_ideal(*A, I);
    for (std::size_t i = 0; i < A->dim(); ++i)
      for (std::size_t j = 0; j < A->dim(); ++j) {
        auto lhs = Qt.projection.apply(A->bracket_basis(i, j));
        auto rhs = Qt.algebra.bracket(Qt.projection.column(i), Qt.projection.column(j));
        EXPECT_EQ(lhs, rhs);
      }
  }
}

TEST(Quotient, RejectsNonIdealAndNonGraded) {
  auto L = g::sl2<Rational>(QQ);
  IdealHandle<Rational> bad{Subspace<Rational>::span(QQ, 3, {e(3, 0)}), true};
  EXPECT_THROW(quotient_by_ideal(L, bad), NotAnIdeal);
  auto H = g::heis3<Rational>(QQ);
  // span{z, x + y} is an ideal (it contains [H, H]) but not graded
  auto mixed = make_ideal(H, Subspace<Rational>::span(QQ, 3, {e(3, 2), add(e(3, 0), e(3, 1))}));
  EXPECT_FALSE(mixed.graded);
  EXPECT_THROW(quotient_by_ideal(H, mixed), NotGraded);
  EXPECT_NO_THROW(quotient_by_ideal(H, mixed, false));
}

TEST(GradedIdeals, LatticeOperationsStayGraded) {
  auto L = g::sl2sum<Fp>(F5);
  std::vector<IdealHandle<Fp>> graded;
  for (std::size_t i = 0; i < L.dim(); ++i) graded.push_back(ideal_generated(L, {L.basis_vector(i)}));
  graded.push_back(make_ideal(L, zero_space(L)));
  for (const auto& I : graded) {
    ASSERT_TRUE(I.graded);
    for (const auto& J : graded) {
      EXPECT_TRUE(is_graded_subspace(L, I.space.sum(J.space)));
      EXPECT_TRUE(is_graded_subspace(L, I.space.intersect(J.space)));
      EXPECT_TRUE(is_graded_subspace(L, bracket_span(L, I.space, J.space)));
    }
    auto ann = annihilator(L, full_space(L), I.space);
    for (const auto& v : ann.basis())
      for (const auto& [deg, comp] : homogeneous_decompose(L, v)) EXPECT_TRUE(ann.contains(comp)) << deg;
  }
}

TEST(GradingGroup, CyclicNormalizes) {
  auto g5 = GradingGroup::cyclic(5);
  EXPECT_EQ(g5.normalize(-1), 4);
  EXPECT_EQ(g5.add(3, 4), 2);
  EXPECT_THROW(GradingGroup::cyclic(1), GradingViolation);
}

TEST(SlnE11, ComponentDimensions) {
  auto L = g::sln_e11<Rational>(QQ, 3);
  EXPECT_EQ(L.dim(), 8u);
  EXPECT_EQ(L.indices_of_degree(-1).size(), 2u);
  EXPECT_EQ(L.indices_of_degree(0).size(), 4u);
  EXPECT_EQ(L.indices_of_degree(1).size(), 2u);
}
