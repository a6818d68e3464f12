// The realified P/I = C[x]/(x^4) with the conjugate bracket is a graded weak algebra
// of quotients of L = {a0 + a2 x^2 + a3 x^3} but not a graded algebra of quotients.

#include <iostream>

#include "gradlie/gallery_lie.hpp"
#include "gradlie/quotients.hpp"

using namespace gradlie;

namespace {

std::string show(const Vec<Rational>& v, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out += (out.empty() ? "" : " + ") + v[i].str() + "*" + names[i];
  return out.empty() ? "0" : out;
}

}  // namespace

int main() {
  const auto f = FieldTag::rationals();
  QuotientEmbedding<Rational> E(gallery::p_mod_i<Rational>(f), gallery::p_mod_i_subalgebra<Rational>(f));
  const auto& names = E.big().names();

  auto weak = is_weak_quotient(E, /*graded=*/true);
  std::cout << "graded weak algebra of quotients: " << (weak.decision.is_true() ? "yes" : "no") << " ("
            << method_name(weak.decision.method) << ")\n";

  auto strong = is_quotient(E, /*graded=*/true);
  std::cout << "graded algebra of quotients: " << (strong.decision.is_true() ? "yes" : "no") << " ("
            << method_name(strong.decision.method) << ")\n";
  if (strong.witness_p) std::cout << "  p = " << show(*strong.witness_p, names) << "\n";
  if (strong.witness_q) std::cout << "  q = " << show(*strong.witness_q, names) << "\n";
  if (!strong.decision.note.empty()) std::cout << "  " << strong.decision.note << "\n";
  return weak.decision.is_true() && strong.decision.is_false() ? 0 : 1;
}
