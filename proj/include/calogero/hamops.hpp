// Reduced (groundstate-conjugated) Calogero Hamiltonians for the A_{N-1}
// and B_N root systems, applied exactly to polynomials.
#pragma once

#include "calogero/rational.hpp"
#include "calogero/sympoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace calogero {

enum class Model { A, B };

std::string to_string(Model m);
Model parse_model(const std::string& s);

/// Particle number and couplings. mu is present iff the model is B.
struct ModelParams {
  Model model = Model::A;
  int N = 1;
  Rational lambda{1};
  std::optional<Rational> mu;

  static ModelParams a(int n, Rational lambda);
  static ModelParams b(int n, Rational lambda, Rational mu);

  /// Throws std::invalid_argument if N < 1, lambda is zero, or mu presence
  /// does not match the model.
  void validate() const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Groundstate energy E_0: N(1 + lambda(N-1)) for A, N(1 + 2mu + 2lambda(N-1)) for B.
Rational ground_energy(const ModelParams& params);
/// E_n = 2|n| + E_0 for A, 4|n| + E_0 for B.
Rational energy(const ModelParams& params, const Label& n);

/// sum_j (-d_j^2 + 2 x_j d_j) p - 2 lambda sum_{j<k} (d_j - d_k) p / (x_j - x_k).
/// Throws NotDivisibleError when p is not symmetric enough for the pair
/// quotients to be polynomial.
SymPoly apply_reduced_A(const SymPoly& p, const ModelParams& params);

/// The B_N reduced operator in z_j = x_j^2:
/// sum_j (-4 z_j d_j^2 + (4 z_j - 2 - 4 mu) d_j) q
///   - 8 lambda sum_{j<k} (z_j d_j - z_k d_k) q / (z_j - z_k).
SymPoly apply_reduced_B(const SymPoly& q, const ModelParams& params);

/// Dispatches on params.model.
SymPoly apply_reduced(const SymPoly& p, const ModelParams& params);

/// Off-diagonal part of the reduced A operator on M_n, in the M basis:
/// H M_n = 2|n| M_n + sum_m entries[m] M_m.
struct ActionRow {
  Label source;
  MExpansion entries;
};

/// Computed by applying the operator to msym(n) and decomposing.
ActionRow monomial_action(const Label& n, const ModelParams& params);

/// Literal transcription of the closed combinatorial action formula with
/// its printed (2 - delta_{2nu, n_j - n_k}) factor. Differs from
/// monomial_action when n has two equal nonzero parts; kept as a cross-check.
ActionRow monomial_action_printed(const Label& n, const ModelParams& params);

/// (n - m) sum_{k=1}^{n-m-1} x^{n-1-k} y^{m-1+k} - m (x^{n-1} y^{m-1} + y^{n-1} x^{m-1})
/// in two variables (x = variable 0, y = variable 1); requires n >= m >= 0.
SymPoly pair_quotient_formula(int n, int m);

/// Coefficients (a, b) -> c, a >= b, such that
/// (d_x - d_y)(H_n(x)H_m(y) + H_n(y)H_m(x)) / (x - y)
///   = sum c (H_a(x)H_b(y) + H_a(y)H_b(x))
/// with a + b <= n + m - 2 and a + b = n + m (mod 2). Throws
/// std::runtime_error if the quotient is not in that span.
std::map<std::pair<int, int>, Rational> pair_coeffs_hermite(int n, int m);

/// H_a(x)H_b(y) + H_a(y)H_b(x) as a two-variable polynomial.
SymPoly symmetrized_hermite_product(int a, int b);

}  // namespace calogero
