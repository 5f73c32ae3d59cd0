#include "calogero/exact.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace calogero;

TEST_CASE("rational basics") {
  CHECK(Rational(6, 4).to_string() == "3/2");
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  Rational r(1);
  CHECK_THROWS_AS(r /= Rational(0), std::domain_error);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(-2, 3) < Rational(1, 5));
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rational(7, 3), 0) == Rational(1));
  CHECK(pochhammer(Rational(3), 2) == Rational(12));
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  for (const Rational z : {Rational(1, 2), Rational(-3), Rational(5, 7), Rational(0)})
    for (int n = 0; n < 50; ++n) {
      CHECK(pochhammer(z, n + 1) == pochhammer(z, n) * (z + Rational(n)));
      CHECK(pochhammer(z, n) == oracle::rising(z, n));
    }
}

TEST_CASE("generalized binomial") {
  CHECK(gbinom(Rational(5, 2), 0) == Rational(1));
  CHECK(gbinom(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(gbinom(Rational(-2), 2) == Rational(3));
  CHECK(gbinom(Rational(-2), 2) == pochhammer(Rational(2), 2) / factorial(2));
  for (const Rational lam : {Rational(1, 2), Rational(3, 2), Rational(2)})
    for (int v = 0; v < 10; ++v) {
      const Rational lhs = v % 2 == 0 ? gbinom(-lam, v) : -gbinom(-lam, v);
      CHECK(lhs == pochhammer(lam, v) / factorial(v));
    }
  CHECK(gbinom(Rational(5), 2) == Rational(10));
  CHECK(gbinom(Rational(2), 3) == Rational(0));
}

TEST_CASE("c coefficients") {
  CHECK(c_coeff(0, Rational(9, 4)) == Rational(1));
  CHECK(c_coeff(1, Rational(2)) == Rational(-1, 2));
  const Rational lam(1, 2);
  CHECK(c_coeff(1, Rational(1) + lam) == Rational(-3, 16));
  // c_s(n) are the coefficients of 2^{-n} H_n for integer n.
  for (int n = 0; n <= 12; ++n) {
    const UniPoly h = oracle::hermite(n) * (Rational(1) / pow(Rational(2), n));
    for (int s = 0; 2 * s <= n; ++s) CHECK(c_coeff(s, Rational(n)) == h.coeff(n - 2 * s));
    CHECK(c_coeff(n / 2 + 1, Rational(n)) == Rational(0));
  }
}

TEST_CASE("b coefficients: examples") {
  for (const Rational a : {Rational(1, 2), Rational(2), Rational(-7, 3)}) {
    CHECK(b_coeff(3, a, 0) == Rational(1));
    CHECK(b_coeff(-2, a, 0) == Rational(1));
    CHECK(b_coeff(1, a, 2) == Rational(0));
    CHECK(b_coeff(1, a, 2, BMode::closed) == Rational(0));
    CHECK(b_coeff(1, a, 1) == a / Rational(2));
    CHECK(b_coeff(1, a, 1, BMode::closed) == a / Rational(2));
  }
}

TEST_CASE("b coefficients: recursion equals the nested closed form") {
  const std::vector<Rational> grid{Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(5, 2)};
  for (int n = -6; n <= 6; ++n)
    for (const auto& a : grid) {
      const auto rec = b_coeffs(n, a, 8);
      for (int s = 0; s <= 8; ++s) {
        CAPTURE(n);
        CAPTURE(s);
        CHECK(rec[static_cast<std::size_t>(s)] == b_coeff(n, a, s, BMode::closed));
        CHECK(rec[static_cast<std::size_t>(s)] == b_coeff(n, a, s));
      }
    }
}

TEST_CASE("b coefficients truncate") {
  for (int n = 0; n <= 6; ++n)
    for (int s = n + 1; s <= n + 6; ++s)
      for (const Rational a : {Rational(1, 2), Rational(7, 3), Rational(-5, 2)}) {
        CHECK(b_coeff(n, a, s) == Rational(0));
        CHECK(b_coeff(n, a, s, BMode::closed) == Rational(0));
      }
}

TEST_CASE("b coefficients reproduce x^n p_a for integer a") {
  // p_k = 2^{-k} H_k is a polynomial for k >= 0; p_k for k < 0 only has
  // negative powers, so those coefficients must vanish.
  auto p = [](int k) { return oracle::hermite(k) * (Rational(1) / pow(Rational(2), k)); };
  for (int a = 0; a <= 6; ++a)
    for (int n = 0; n <= 4; ++n) {
      const auto b = b_coeffs(n, Rational(a), 8);
      UniPoly rhs;
      for (int s = 0; s <= 8; ++s) {
        if (a + n - 2 * s >= 0)
          rhs += p(a + n - 2 * s) * b[static_cast<std::size_t>(s)];
        else
          CHECK(b[static_cast<std::size_t>(s)] == Rational(0));
      }
      CHECK(rhs == UniPoly::monomial(n) * p(a));
    }
}

TEST_CASE("three-term recursion of p_n") {
  auto p = [](int k) { return classical_poly(ClassicalKind::hermite, k) * (Rational(1) / pow(Rational(2), k)); };
  for (int n = 1; n <= 15; ++n)
    CHECK(UniPoly::x() * p(n) == p(n + 1) + p(n - 1) * Rational(n, 2));
}

TEST_CASE("hermite polynomials") {
  CHECK(classical_poly(ClassicalKind::hermite, 0) == UniPoly(Rational(1)));
  UniPoly h2 = UniPoly::monomial(2, Rational(4)) - UniPoly(Rational(2));
  CHECK(classical_poly(ClassicalKind::hermite, 2) == h2);
  for (int n = 0; n <= 15; ++n) {
    const UniPoly h = classical_poly(ClassicalKind::hermite, n);
    CHECK(h == oracle::hermite(n));
    const UniPoly lhs = h.derivative(2) * Rational(-1) + UniPoly::x() * h.derivative() * Rational(2);
    CHECK(lhs == h * Rational(2 * n));
  }
}

TEST_CASE("laguerre polynomials") {
  const Rational a(3, 2);
  CHECK(classical_poly(ClassicalKind::laguerre, 1, a) == UniPoly(Rational(1) + a) - UniPoly::x());
  CHECK_THROWS_AS(classical_poly(ClassicalKind::laguerre, 2), std::invalid_argument);
  for (const Rational alpha : {Rational(0), Rational(1), Rational(-1, 2), Rational(5, 3)})
    for (int n = 0; n <= 15; ++n) {
      const UniPoly q = classical_poly(ClassicalKind::laguerre, n, alpha);
      CHECK(q == oracle::laguerre(n, alpha));
      const UniPoly lhs = UniPoly::x() * q.derivative(2) + (UniPoly(alpha + Rational(1)) - UniPoly::x()) * q.derivative() +
                          q * Rational(n);
      CHECK(lhs.is_zero());
    }
}

TEST_CASE("unipoly proportionality") {
  const UniPoly h = classical_poly(ClassicalKind::hermite, 3);
  CHECK(proportional(h * Rational(-2, 7), h));
  CHECK_FALSE(proportional(h, h + UniPoly(Rational(1))));
  CHECK_FALSE(proportional(UniPoly(), h));
}
