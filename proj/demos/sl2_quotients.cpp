// sl_2 is its own maximal algebra of quotients: Der(E0, L) with E0 = sl_2 is ad(sl_2).

#include <iostream>

#include "gradlie/gallery_lie.hpp"
#include "gradlie/quotients.hpp"

using namespace gradlie;

int main() {
  const auto f = FieldTag::rationals();
  const auto L = gallery::sl2<Rational>(f);

  auto s = analyze(L, /*graded=*/false);
  std::cout << "sl2: dim " << s.dim << ", center " << s.center_dim << ", Killing det "
            << (s.killing_determinant ? s.killing_determinant->str() : "n/a") << "\n";

  auto M = maximal_quotients(L);
  std::cout << "Q_m(sl2): dim " << M.algebra.dim() << ", witness ideal dim " << M.witness_ideal.space.dim()
            << ", embedding bijective: " << std::boolalpha << M.embedding_bijective() << "\n";

  auto report = check_axiomatic(as_embedding(M));
  std::cout << "axiomatic conditions (i) " << report.condition_i << ", (ii) " << report.condition_ii << ", (iii) "
            << report.condition_iii << "\n";

  auto t = compare_graded_quotients(L);
  std::cout << "graded components of Q_m:";
  for (const auto& [d, n] : t.qm_components) std::cout << " " << d << ":" << n;
  std::cout << "\nQ_m isomorphic to Q_gr-m: " << t.isomorphic() << "\n";
  return M.embedding_bijective() && report.all() ? 0 : 1;
}
