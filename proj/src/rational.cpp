#include "calogero/rational.hpp"

#include <cctype>

namespace calogero {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip_plus(std::string_view s) {
  return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  mpz_class p(strip_plus(num), 10);
  mpz_class q = 1;
  if (slash != std::string_view::npos) {
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(den)) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    q = mpz_class(strip_plus(den), 10);
    if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  return Rational(mpq_class(p, q));
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

long Rational::to_long() const {
  if (!is_integer() || !value_.get_num().fits_slong_p())
    throw std::range_error("Rational::to_long: " + to_string());
  return value_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational pow(const Rational& base, int exponent) {
  Rational result(1);
  Rational b = exponent < 0 ? Rational(1) / base : base;
  for (int e = exponent < 0 ? -exponent : exponent; e > 0; e >>= 1) {
    if (e & 1) result *= b;
    b *= b;
  }
  return result;
}

}  // namespace calogero
