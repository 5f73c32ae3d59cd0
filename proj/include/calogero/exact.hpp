// One-variable exact sequences: Pochhammer symbols, generalized binomials,
// the coefficient families of the formal Hermite series and its products
// with powers of x, and the classical Hermite / Laguerre polynomials.
#pragma once

#include "calogero/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace calogero {

/// Univariate polynomial with rational coefficients. Zero coefficients are
/// never stored; iteration runs over strictly increasing degrees.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(const Rational& constant);
  static UniPoly monomial(int degree, const Rational& coeff = Rational(1));
  static UniPoly x() { return monomial(1); }

  [[nodiscard]] const std::map<int, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  [[nodiscard]] Rational coeff(int degree) const;
  [[nodiscard]] Rational leading_coeff() const;
  [[nodiscard]] UniPoly derivative(int order = 1) const;
  [[nodiscard]] std::string to_string(const std::string& var = "x") const;

  void add_term(int degree, const Rational& c);

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
  std::map<int, Rational> terms_;
};

/// True iff lc(b)·a == lc(a)·b and both are nonzero.
bool proportional(const UniPoly& a, const UniPoly& b);

/// Rising factorial (z)_n = z(z+1)...(z+n-1); (z)_0 = 1.
Rational pochhammer(const Rational& z, int n);

/// a(a-1)...(a-k+1)/k!, with rational upper argument.
Rational gbinom(const Rational& a, int k);

Rational factorial(int n);

/// c_s(a) = (-1)^s (a-2s+1)_{2s} / (4^s s!), the coefficients of
/// p_a(x) = 2^{-a} H_a(x) = sum_s c_s(a) x^{a-2s}.
Rational c_coeff(int s, const Rational& a);

enum class BMode { recursion, closed };

/// Expansion coefficients of x^n p_a(x) = sum_s b_s(n, a) p_{a+n-2s}(x).
Rational b_coeff(int n, const Rational& a, int s, BMode mode = BMode::recursion);

/// b_0..b_{smax} by the recursion b_s = c_s(a) - sum_{j<s} b_j c_{s-j}(a+n-2j).
std::vector<Rational> b_coeffs(int n, const Rational& a, int smax);

enum class ClassicalKind { hermite, laguerre };

/// H_n(x) (physicists' normalization), or L_n^{(a)}(x). Throws
/// std::invalid_argument when a Laguerre parameter is missing or n < 0.
UniPoly classical_poly(ClassicalKind kind, int n, const std::optional<Rational>& a = std::nullopt);

}  // namespace calogero
