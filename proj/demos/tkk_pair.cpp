// TKK of the rectangular pair (M_1x2, M_2x1) and the round trip back to the pair.

#include <iostream>

#include "gradlie/gallery_jordan.hpp"
#include "gradlie/jordan_quotients.hpp"

using namespace gradlie;

int main() {
  const auto f = FieldTag::rationals();
  const auto V = gallery::pair_rect<Rational>(f, 1, 2);
  std::cout << "V = (M_1x2, M_2x1): dims " << V.dim(Sign::Plus) << " + " << V.dim(Sign::Minus) << "\n";

  const auto T = tkk(V);
  std::cout << "TKK(V): dim " << T.algebra.dim() << " = " << T.plus_dim << " + " << T.zero_dim << " + "
            << T.minus_dim << "\n";
  std::cout << "TKK(V) semiprime: " << std::boolalpha << analyze(T.algebra, false).semiprime.is_true() << "\n";

  const auto A = associated_pair(T.algebra);
  std::cout << "C_V dim " << A.c_v.dim() << ", canonical map an isomorphism: " << A.isomorphism_verified() << "\n";

  const auto M = maximal_pair_quotients(V);
  std::cout << "maximal pair quotients equal V: " << M.is_identity() << ", verdict "
            << (M.verdict.decision.is_true() ? "true" : "not true") << "\n";
  return A.isomorphism_verified() && M.is_identity() ? 0 : 1;
}
