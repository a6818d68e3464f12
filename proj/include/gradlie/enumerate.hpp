#pragma once

// Exhaustive scans over F_p. Points are enumerated projectively (first
// nonzero coordinate equal to 1); every predicate scanned here is invariant
// under nonzero scaling.

#include <cstdlib>
#include <functional>
#include <set>

#include "gradlie/lie.hpp"

namespace gradlie {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Default element budget; GRADLIE_BUDGET overrides it when set to a positive integer.
inline std::uint64_t default_budget() {
  if (const char* env = std::getenv("GRADLIE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

/// p^d, saturating at UINT64_MAX.
inline std::uint64_t field_size_power(std::uint64_t p, std::size_t d) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (r > UINT64_MAX / p) return UINT64_MAX;
    r *= p;
  }
  return r;
}

inline void require_budget(std::uint64_t p, std::size_t d, std::uint64_t budget) {
  const auto n = field_size_power(p, d);
  if (n > budget)
    throw DimensionTooLarge("exhaustive scan of " + std::to_string(p) + "^" + std::to_string(d) +
                            " elements exceeds the budget of " + std::to_string(budget));
}

/// Calls `visit` on every projective point of K^d; stops early when it returns false.
/// Returns false iff stopped early.
inline bool for_each_projective(const FieldTag& f, std::size_t d,
                                const std::function<bool(const Vec<Fp>&)>& visit) {
  const std::uint32_t p = f.characteristic;
  for (std::size_t lead = 0; lead < d; ++lead) {
    Vec<Fp> v = zero_vector<Fp>(f, d);
    v[lead] = one_of<Fp>(f);
    // odometer over coordinates lead+1 .. d-1
    std::vector<std::uint32_t> digits(d - lead - 1, 0);
    while (true) {
      if (!visit(v)) return false;
      std::size_t k = 0;
      while (k < digits.size() && digits[k] == p - 1) {
        digits[k] = 0;
        v[lead + 1 + k] = zero_of<Fp>(f);
        ++k;
      }
      if (k == digits.size()) break;
      ++digits[k];
      v[lead + 1 + k] = Fp::from_int(f, digits[k]);
    }
  }
  return true;
}

/// Projective points of a subspace, pushed forward through its echelon basis.
inline bool for_each_projective_in(const Subspace<Fp>& s, const std::function<bool(const Vec<Fp>&)>& visit) {
  return for_each_projective(s.field(), s.dim(), [&](const Vec<Fp>& c) { return visit(s.combine(c)); });
}

/// Projective points of every homogeneous component of L.
inline bool for_each_homogeneous(const LieAlgebra<Fp>& L, const std::function<bool(const Vec<Fp>&)>& visit) {
  for (auto d : L.support()) {
    std::vector<Vec<Fp>> gens;
    for (auto i : L.indices_of_degree(d)) gens.push_back(L.basis_vector(i));
    auto comp = Subspace<Fp>::span(L.field(), L.dim(), gens);
    if (!for_each_projective_in(comp, visit)) return false;
  }
  return true;
}

/// Element count a scan of L would touch: p^dim, or the sum over components when graded.
inline std::uint64_t scan_size(const LieAlgebra<Fp>& L, bool homogeneous) {
  const std::uint64_t p = L.field().characteristic;
  if (!homogeneous) return field_size_power(p, L.dim());
  std::uint64_t total = 0;
  for (auto d : L.support()) {
    auto c = field_size_power(p, L.indices_of_degree(d).size());
    total = (c == UINT64_MAX || total > UINT64_MAX - c) ? UINT64_MAX : total + c;
  }
  return total;
}

inline void require_scan_budget(const LieAlgebra<Fp>& L, bool homogeneous, std::uint64_t budget) {
  if (scan_size(L, homogeneous) > budget)
    throw DimensionTooLarge("exhaustive scan over " + L.field().name() + " of dimension " +
                            std::to_string(L.dim()) + " exceeds the budget of " + std::to_string(budget));
}

/// Every nonzero ideal contains a principal one, so ideal-existence questions
/// reduce to this finite catalog. In graded mode only homogeneous generators are used,
/// which yields exactly the principal graded ideals.
struct PrincipalIdealCatalog {
  bool graded = false;
  std::vector<Subspace<Fp>> ideals;  // distinct, nonzero, sorted
  std::vector<Vec<Fp>> generators;   // generators[i] generates ideals[i]

  /// Indices of ideals containing no other catalog ideal properly.
  [[nodiscard]] std::vector<std::size_t> minimal() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      bool is_min = true;
      for (std::size_t j = 0; j < ideals.size() && is_min; ++j)
        if (j != i && ideals[j].dim() < ideals[i].dim() && ideals[i].contains(ideals[j])) is_min = false;
      if (is_min) out.push_back(i);
    }
    return out;
  }
};

inline PrincipalIdealCatalog principal_ideals(const LieAlgebra<Fp>& L, bool graded,
                                              std::uint64_t budget = default_budget()) {
  require_scan_budget(L, graded, budget);
  std::map<Subspace<Fp>, Vec<Fp>> found;
  auto visit = [&](const Vec<Fp>& x) {
    auto I = ideal_closure(L, Subspace<Fp>::span(L.field(), L.dim(), {x}));
    found.try_emplace(std::move(I), x);
    return true;
  };
  if (graded)
    for_each_homogeneous(L, visit);
  else
    for_each_projective(L.field(), L.dim(), visit);
  PrincipalIdealCatalog cat;
  cat.graded = graded;
  for (auto& [I, g] : found) {
    cat.ideals.push_back(I);
    cat.generators.push_back(g);
  }
  return cat;
}

}  // namespace gradlie
