// The contour-integral basis f_n realized combinatorially: enumeration of
// the residue constraint equations and assembly of the resulting
// symmetric polynomials, plus the Hermite-flavoured variant f^(H)_n.
#pragma once

#include "calogero/hamops.hpp"
#include "calogero/rational.hpp"
#include "calogero/sympoly.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace calogero {

/// One nonnegative solution of the constraint system
///   n_j - sum_{l<j} kappa_{lj} + sum_{l>j} kappa_{jl} - sum_l nu_{lj} = 0.
/// kappa is only meaningful strictly above the diagonal.
struct ConstraintSolution {
  std::vector<std::vector<int>> kappa;
  std::vector<std::vector<int>> nu;

  [[nodiscard]] bool satisfies(const Label& n) const;
  /// prod (-1)^kappa binom(lambda, kappa) * prod (-1)^nu binom(-lambda, nu).
  [[nodiscard]] Rational weight(const Rational& lambda) const;
  /// Exponent of x_r is sum_s nu_{rs}.
  [[nodiscard]] Exponent monomial() const;
};

/// Visits every solution exactly once, resolving column j = N first and
/// working down to j = 1. Visits nothing when a tail sum of n is negative.
void for_each_solution(const Label& n, const std::function<void(const ConstraintSolution&)>& visit);
std::vector<ConstraintSolution> enumerate_solutions(const Label& n);

/// f_n as the plain sum over enumerate_solutions. Slow; used to cross-check.
SymPoly f_from_solutions(const Label& n, const Rational& lambda);

/// f_n computed without the memo.
SymPoly f_expand_uncached(const Label& n, const Rational& lambda);

/// f_n, memoized per (N, lambda, n). For model B the result is read in the
/// variables z_j = x_j^2; the polynomial itself is the same.
SymPoly f_expand(const Label& n, const ModelParams& params);

/// f^(H)_n = sum_s prod_j c_{s_j}(n~_j - 1) f_{n - 2s}, n~_j = n_j + lambda(N+1-j).
SymPoly fH_expand(const Label& n, const ModelParams& params);

/// Optional persistent layer behind the in-process memo.
class FExpansionStore {
public:
  virtual ~FExpansionStore() = default;
  virtual std::optional<SymPoly> load(const Rational& lambda, const Label& n) = 0;
  virtual void store(const Rational& lambda, const Label& n, const SymPoly& f) = 0;
};

void set_f_expansion_store(std::shared_ptr<FExpansionStore> store);
void clear_f_expansion_memo();
std::size_t f_expansion_memo_size();

}  // namespace calogero
