#include <gtest/gtest.h>

#include "gradlie/gallery.hpp"
#include "gradlie/io.hpp"

using namespace gradlie;
namespace g = gradlie::gallery;
using io::Json;

namespace {

const FieldTag QQ = FieldTag::rationals();
const FieldTag F5 = FieldTag::prime(5);
using R = Rational;

R q(long long n, long long d = 1) { return R::from_ratio(QQ, n, d); }

const std::vector<std::string> kAllNames = {
    "sl2",        "sl2sum",         "heis3",     "gl2",          "sln_e11(2)",   "sln_e11(3)",
    "sln_e11(4)", "p_mod_i",        "m_n_transpose(1)", "m_n_transpose(2)", "m_n_transpose(3)",
    "pair_field", "pair_rect(1,2)", "pair_rect(2,2)", "pair_zero", "pair_padded", "triple_field",
    "jalg_field", "jalg_sym2"};

// Parses into the typed object for the document's kind and serializes it again.
std::string reserialize(const std::string& text) {
  auto d = io::parse_document(text);
  return io::with_field(d.field, [&]<class K>(FieldTag) -> std::string {
    if (d.kind == "lie") {
      auto L = io::parse_lie<K>(d);
      return io::format(io::lie_json(L, io::parse_subalgebra<K>(d, L.dim())));
    }
    if (d.kind == "assoc") return io::format(io::assoc_json(io::parse_assoc<K>(d)));
    if (d.kind == "jordan_pair") {
      auto V = io::parse_pair<K>(d);
      return io::format(io::pair_json(V, io::parse_subpair<K>(d, V)));
    }
    if (d.kind == "jordan_triple") return io::format(io::triple_json(io::parse_triple<K>(d)));
    return io::format(io::jordan_algebra_json(io::parse_jordan_algebra<K>(d)));
  });
}

io::Document doc(const std::string& text) { return io::parse_document(text); }

}  // namespace

TEST(IoRoundTrip, EveryGalleryFileOverQ) {
  for (const auto& n : kAllNames) {
    const auto text = io::format(g::gallery_json(n));
    EXPECT_EQ(reserialize(text), text) << n;
  }
}

TEST(IoRoundTrip, EveryGalleryFileOverF5) {
  for (const auto& n : kAllNames) {
    const auto text = io::format(g::gallery_json(n, F5));
    EXPECT_NE(text.find("\"Fp\":5"), std::string::npos) << n;
    EXPECT_EQ(reserialize(text), text) << n;
  }
}

TEST(IoRoundTrip, FractionsSurvive) {
  auto L = io::parse_lie<R>(doc(R"({"kind":"lie","scalars":"Q","basis":["a","b"],
      "table":[[0,1,[[1,"-3/6"]]]]})"));
  EXPECT_EQ(L.bracket_basis(0, 1)[1], q(-1, 2));
  EXPECT_EQ(L.bracket_basis(1, 0)[1], q(1, 2));
  const auto text = io::format(io::lie_json(L));
  EXPECT_NE(text.find("\"-1/2\""), std::string::npos);
  EXPECT_EQ(reserialize(text), text);
}

TEST(GalleryDeterminism, TwoCallsAgree) {
  for (const auto& n : kAllNames) EXPECT_EQ(io::format(g::gallery_json(n)), io::format(g::gallery_json(n))) << n;
}

TEST(GalleryNames, ParenAndColonFormsAgree) {
  EXPECT_EQ(io::format(g::gallery_json("pair_rect(1,2)")), io::format(g::gallery_json("pair_rect:1,2")));
  EXPECT_EQ(io::format(g::gallery_json("sln_e11(3)")), io::format(g::gallery_json("sln_e11:3")));
}

TEST(GalleryNames, Rejections) {
  EXPECT_THROW(g::gallery_json("nosuch"), ParseError);
  EXPECT_THROW(g::gallery_json("sl2(3)"), ParseError);
  EXPECT_THROW(g::gallery_json("pair_rect(1)"), ParseError);
  EXPECT_THROW(g::gallery_json("sln_e11(x)"), ParseError);
  EXPECT_THROW(g::gallery_json("sln_e11(3"), ParseError);
  EXPECT_THROW(g::gallery_json("sln_e11(99)"), DimensionTooLarge);
  EXPECT_THROW(g::gallery_json("sln_e11(1)"), DimensionMismatch);
}

TEST(GalleryNames, EveryListedEntryBuilds) {
  for (const auto& e : g::gallery_entries()) {
    std::string n = e.name;
    if (e.arity == 1) n += "(2)";
    if (e.arity == 2) n += "(1,2)";
    EXPECT_NO_THROW(g::gallery_json(n)) << n;
  }
}

TEST(GalleryContent, Sl2HasDegreesOneMinusOneZero) {
  auto j = g::gallery_json("sl2");
  EXPECT_EQ(j["basis"], Json::array({"e12", "e21", "h"}));
  EXPECT_EQ(j["grading"]["degrees"], Json::array({1, -1, 0}));
  EXPECT_EQ(j["grading"]["group"], "Z");
}

TEST(GalleryContent, SlnE11ThreeIsJordanThreeGraded) {
  auto L = io::parse_lie<R>(doc(io::format(g::gallery_json("sln_e11(3)"))));
  ASSERT_EQ(L.dim(), 8u);
  EXPECT_EQ(L.indices_of_degree(-1).size(), 2u);
  EXPECT_EQ(L.indices_of_degree(0).size(), 4u);
  EXPECT_EQ(L.indices_of_degree(1).size(), 2u);
  auto component = [&](std::int64_t d) {
    std::vector<Vec<R>> gens;
    for (auto i : L.indices_of_degree(d)) gens.push_back(unit_vector<R>(QQ, 8, i));
    return Subspace<R>::span(QQ, 8, gens);
  };
  EXPECT_EQ(bracket_span(L, component(1), component(-1)), component(0));
}

TEST(GalleryContent, PModIIsTheRealification) {
  auto d = doc(io::format(g::gallery_json("p_mod_i")));
  auto L = io::parse_lie<R>(d);
  ASSERT_EQ(L.dim(), 8u);
  EXPECT_EQ(L.names(), (std::vector<std::string>{"1", "i", "x", "ix", "x2", "ix2", "x3", "ix3"}));
  EXPECT_EQ(L.degrees(), (std::vector<std::int64_t>{0, 0, 1, 1, 2, 2, 3, 3}));
  // [a x^r, b x^s] = (a conj(b) - b conj(a)) x^(r+s), recomputed with complex pairs.
  struct C {
    long long re, im;
  };
  auto coeff = [](std::size_t k) { return k % 2 == 0 ? C{1, 0} : C{0, 1}; };
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      const C u = coeff(a), v = coeff(b);
      // u conj(v) - v conj(u) = 2i Im(u conj(v))
      const long long im = 2 * (u.im * v.re - u.re * v.im);
      auto expect = zero_vector<R>(QQ, 8);
      const std::size_t deg = a / 2 + b / 2;
      if (deg <= 3 && im != 0) expect[2 * deg + 1] = q(im);
      EXPECT_EQ(L.bracket_basis(a, b), expect) << a << "," << b;
    }
  auto S = io::parse_subalgebra<R>(d, 8);
  ASSERT_TRUE(S.has_value());
  EXPECT_EQ(S->dim(), 6u);
  EXPECT_FALSE(S->contains(unit_vector<R>(QQ, 8, 2)));
  EXPECT_TRUE(S->contains(unit_vector<R>(QQ, 8, 6)));
  EXPECT_TRUE(is_subalgebra(L, *S));
}

TEST(GalleryContent, PairZeroHasNoProducts) {
  auto j = g::gallery_json("pair_zero");
  EXPECT_EQ(j["kind"], "jordan_pair");
  EXPECT_TRUE(j["table"]["plus"].empty());
  EXPECT_TRUE(j["table"]["minus"].empty());
}

TEST(IoFill, LieMirrorIsAntisymmetric) {
  auto L = io::parse_lie<R>(doc(R"({"kind":"lie","scalars":"Q","basis":["x","y","z"],
      "table":[[0,1,[[2,"1"]]]]})"));
  EXPECT_EQ(L.bracket_basis(1, 0), (Vec<R>{q(0), q(0), q(-1)}));
  // Writing both orders consistently is accepted.
  EXPECT_NO_THROW(io::parse_lie<R>(doc(R"({"kind":"lie","scalars":"Q","basis":["x","y","z"],
      "table":[[0,1,[[2,"1"]]],[1,0,[[2,"-1"]]]]})")));
  EXPECT_THROW(io::parse_lie<R>(doc(R"({"kind":"lie","scalars":"Q","basis":["x","y","z"],
      "table":[[0,1,[[2,"1"]]],[1,0,[[2,"1"]]]]})")),
               AntisymmetryViolation);
}

TEST(IoFill, DuplicateEntriesAdd) {
  auto L = io::parse_lie<R>(doc(R"({"kind":"lie","scalars":"Q","basis":["x","y","z"],
      "table":[[0,1,[[2,"1"]]],[0,1,[[2,"1/2"]]]]})"));
  EXPECT_EQ(L.bracket_basis(0, 1)[2], q(3, 2));
}

TEST(IoFill, AssocHasNoMirror) {
  auto A = io::parse_assoc<R>(doc(R"({"kind":"assoc","scalars":"Q","basis":["e11","e12","e21","e22"],
      "table":[[0,0,[[0,"1"]]],[0,1,[[1,"1"]]],[1,2,[[0,"1"]]],[1,3,[[1,"1"]]],
               [2,0,[[2,"1"]]],[2,1,[[3,"1"]]],[3,2,[[2,"1"]]],[3,3,[[3,"1"]]]]})"));
  EXPECT_EQ(A.multiply(unit_vector<R>(QQ, 4, 1), unit_vector<R>(QQ, 4, 0)), zero_vector<R>(QQ, 4));
  EXPECT_EQ(A.multiply(unit_vector<R>(QQ, 4, 0), unit_vector<R>(QQ, 4, 1)), unit_vector<R>(QQ, 4, 1));
}

TEST(IoFill, JordanAlgebraMirrorIsCommutative) {
  auto J = io::parse_jordan_algebra<R>(doc(R"({"kind":"jordan_algebra","scalars":"Q","basis":["e","n"],
      "table":[[0,0,[[0,"1"]]],[0,1,[[1,"1"]]]]})"));
  EXPECT_EQ(J.multiply(unit_vector<R>(QQ, 2, 1), unit_vector<R>(QQ, 2, 0)), unit_vector<R>(QQ, 2, 1));
}

TEST(IoFill, PairMirrorSwapsOuterArguments) {
  // Files list {x, y, z} with z >= x only; the rest must come back from outer symmetry.
  const auto V = g::pair_rect<R>(QQ, 2, 1);
  const auto j = io::pair_json(V);
  for (const auto& e : j["table"]["plus"]) EXPECT_GE(e[2].get<std::size_t>(), e[0].get<std::size_t>());
  auto W = io::parse_pair<R>(doc(io::format(j)));
  for (auto s : kSigns)
    for (std::size_t i = 0; i < V.dim(s); ++i)
      for (std::size_t k = 0; k < V.dim(flip(s)); ++k)
        for (std::size_t l = 0; l < V.dim(s); ++l) EXPECT_EQ(W.triple_basis(s, i, k, l), V.triple_basis(s, i, k, l));
}

TEST(IoInvolution, FileRowsAreImagesOfBasisVectors) {
  // A = F x F on u = (1,1), v = (1,0); the swap sends v to u - v.
  const std::string text = R"({"kind":"assoc","scalars":"Q","basis":["u","v"],
      "table":[[0,0,[[0,"1"]]],[0,1,[[1,"1"]]],[1,0,[[1,"1"]]],[1,1,[[1,"1"]]]],
      "involution":[["1","0"],["1","-1"]]})";
  auto A = io::parse_assoc<R>(doc(text));
  EXPECT_EQ(A.star(unit_vector<R>(QQ, 2, 1)), (Vec<R>{q(1), q(-1)}));
  EXPECT_EQ(A.star(unit_vector<R>(QQ, 2, 0)), (Vec<R>{q(1), q(0)}));
  auto j = io::assoc_json(A);
  EXPECT_EQ(j["involution"], Json::array({Json::array({"1", "0"}), Json::array({"1", "-1"})}));
}

TEST(IoInvolution, TransposeOnM2SwapsOffDiagonal) {
  auto A = io::parse_assoc<R>(doc(io::format(g::gallery_json("m_n_transpose(2)"))));
  EXPECT_EQ(A.star(unit_vector<R>(QQ, 4, 1)), unit_vector<R>(QQ, 4, 2));
  EXPECT_EQ(A.star(unit_vector<R>(QQ, 4, 0)), unit_vector<R>(QQ, 4, 0));
}

TEST(IoErrors, MalformedDocuments) {
  EXPECT_THROW(doc("{"), ParseError);
  EXPECT_THROW(doc("[]"), ParseError);
  EXPECT_THROW(doc(R"({"scalars":"Q"})"), ParseError);
  EXPECT_THROW(doc(R"({"kind":"group","scalars":"Q"})"), ParseError);
  EXPECT_THROW(doc(R"({"kind":"lie","scalars":"R"})"), ParseError);
  EXPECT_THROW(doc(R"({"kind":"lie","scalars":{"Fp":4}})"), Error);
  EXPECT_THROW(doc(R"({"kind":"lie","scalars":"Q","subalgebra":[],"subpair":{}})"), ParseError);
}

TEST(IoErrors, BadCoefficientsAndIndices) {
  auto lie = [](const std::string& table) {
    return io::parse_lie<R>(doc(R"({"kind":"lie","scalars":"Q","basis":["x","y"],"table":)" + table + "}"));
  };
  try {
    lie(R"([[0,1,[[1,"1/0"]]]])");
    FAIL() << "1/0 accepted";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("table"), std::string::npos);
  }
  EXPECT_THROW(lie(R"([[0,1,[[1,"abc"]]]])"), ParseError);
  EXPECT_THROW(lie(R"([[0,2,[[1,"1"]]]])"), ParseError);
  EXPECT_THROW(lie(R"([[0,1,[[5,"1"]]]])"), ParseError);
  EXPECT_THROW(lie(R"([[0,1]])"), ParseError);
  EXPECT_THROW(lie(R"([[-1,1,[[0,"1"]]]])"), ParseError);
}

TEST(IoErrors, FpCoefficientWithDenominatorDivisibleByP) {
  EXPECT_THROW(io::parse_lie<Fp>(doc(R"({"kind":"lie","scalars":{"Fp":5},"basis":["x","y"],
      "table":[[0,1,[[1,"1/5"]]]]})")),
               ParseError);
}

TEST(IoErrors, WrongKindForReader) {
  EXPECT_THROW(io::parse_assoc<R>(doc(io::format(g::gallery_json("sl2")))), ParseError);
}

TEST(IoFormat, ShortValuesStayOnOneLineAndOutputEndsWithNewline) {
  Json j = Json::object();
  j["a"] = Json::array({1, 2, 3});
  const auto s = io::format(j);
  EXPECT_EQ(s, "{\"a\":[1,2,3]}\n");
  Json long_j = Json::object();
  Json arr = Json::array();
  for (int i = 0; i < 40; ++i) arr.push_back(i * 1000);
  long_j["a"] = arr;
  const auto t = io::format(long_j);
  EXPECT_GT(std::count(t.begin(), t.end(), '\n'), 40);
  EXPECT_EQ(io::parse_document(R"({"kind":"lie","scalars":"Q"})").kind, "lie");
}
