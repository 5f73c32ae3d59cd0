#include "calogero/exact.hpp"

#include <sstream>
#include <stdexcept>

namespace calogero {

UniPoly::UniPoly(const Rational& constant) { add_term(0, constant); }

UniPoly UniPoly::monomial(int degree, const Rational& coeff) {
  UniPoly p;
  p.add_term(degree, coeff);
  return p;
}

Rational UniPoly::coeff(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational UniPoly::leading_coeff() const {
  return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
}

void UniPoly::add_term(int degree, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, c] : terms_) c *= s;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) r.add_term(da + db, ca * cb);
  return r;
}

UniPoly UniPoly::derivative(int order) const {
  UniPoly r;
  for (const auto& [d, c] : terms_) {
    if (d < order) continue;
    Rational f = c;
    for (int i = 0; i < order; ++i) f *= Rational(d - i);
    r.add_term(d - order, f);
  }
  return r;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [d, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (d == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << "*";
    os << var;
    if (d != 1) os << "^" << d;
  }
  return os.str();
}

bool proportional(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return false;
  return a * b.leading_coeff() == b * a.leading_coeff();
}

Rational pochhammer(const Rational& z, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative length");
  Rational r(1);
  for (int i = 0; i < n; ++i) r *= z + Rational(i);
  return r;
}

Rational factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

Rational gbinom(const Rational& a, int k) {
  if (k < 0) throw std::invalid_argument("gbinom: negative lower index");
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= a - Rational(i);
  return r / factorial(k);
}

Rational c_coeff(int s, const Rational& a) {
  if (s < 0) throw std::invalid_argument("c_coeff: negative index");
  Rational r = pochhammer(a - Rational(2 * s - 1), 2 * s) / (pow(Rational(4), s) * factorial(s));
  return s % 2 == 0 ? r : -r;
}

std::vector<Rational> b_coeffs(int n, const Rational& a, int smax) {
  std::vector<Rational> b;
  b.reserve(static_cast<std::size_t>(smax) + 1);
  for (int s = 0; s <= smax; ++s) {
    Rational v = c_coeff(s, a);
    for (int j = 0; j < s; ++j) v -= b[static_cast<std::size_t>(j)] * c_coeff(s - j, a + Rational(n - 2 * j));
    b.push_back(std::move(v));
  }
  return b;
}

namespace {

// Nested-sum closed form: the recursion unrolled over strictly decreasing
// chains s = s_0 > s_1 > ... > s_j >= 0, with the Pochhammer factors of the
// intermediate links telescoped into (a+n-2s+1)_{2(s-s_j)}.
void closed_form_chains(int s, int current, int depth, const Rational& denom_links, const Rational& a,
                        int n, Rational& acc) {
  for (int next = current - 1; next >= 0; --next) {
    const Rational links = denom_links * factorial(current - next);
    const int j = depth + 1;
    Rational term = pochhammer(a - Rational(2 * next - 1), 2 * next) *
                    pochhammer(a + Rational(n - 2 * s + 1), 2 * (s - next)) /
                    (pow(Rational(4), s) * factorial(next) * links);
    acc += (j + s) % 2 == 0 ? term : -term;
    closed_form_chains(s, next, j, links, a, n, acc);
  }
}

}  // namespace

Rational b_coeff(int n, const Rational& a, int s, BMode mode) {
  if (s < 0) throw std::invalid_argument("b_coeff: negative index");
  if (mode == BMode::recursion) return b_coeffs(n, a, s).back();
  Rational acc = c_coeff(s, a);
  closed_form_chains(s, s, 0, Rational(1), a, n, acc);
  return acc;
}

UniPoly classical_poly(ClassicalKind kind, int n, const std::optional<Rational>& a) {
  if (n < 0) throw std::invalid_argument("classical_poly: negative degree");
  UniPoly p;
  if (kind == ClassicalKind::hermite) {
    for (int k = 0; 2 * k <= n; ++k) {
      Rational c = factorial(n) / (factorial(k) * factorial(n - 2 * k)) * pow(Rational(2), n - 2 * k);
      p.add_term(n - 2 * k, k % 2 == 0 ? c : -c);
    }
    return p;
  }
  if (!a) throw std::invalid_argument("classical_poly: Laguerre polynomial requires a parameter");
  // L_n^{(a)}(x) = sum_k (-1)^k binom(n+a, n-k) x^k / k!
  for (int k = 0; k <= n; ++k) {
    Rational c = pochhammer(*a + Rational(k + 1), n - k) / (factorial(n - k) * factorial(k));
    p.add_term(k, k % 2 == 0 ? c : -c);
  }
  return p;
}

}  // namespace calogero
