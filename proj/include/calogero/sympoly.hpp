// Exact multivariate polynomials, monomial symmetric functions in the
// all-permutations normalization, and the two partial orders on labels.
#pragma once

#include "calogero/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace calogero {

/// Integer N-tuple indexing basis functions and eigenfunctions.
class Label {
public:
  Label() = default;
  explicit Label(std::vector<int> entries) : entries_(std::move(entries)) {}
  Label(std::initializer_list<int> entries) : entries_(entries) {}
  static Label zeros(int n) { return Label(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  [[nodiscard]] int size() const { return static_cast<int>(entries_.size()); }
  [[nodiscard]] const std::vector<int>& entries() const { return entries_; }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return entries_[static_cast<std::size_t>(i)]; }

  /// |n| = n_1 + ... + n_N.
  [[nodiscard]] int weight() const;
  /// n_j + ... + n_N for a 0-based start index j.
  [[nodiscard]] int tail_sum(int j) const;
  /// n_1 + ... + n_{j+1} for a 0-based end index j.
  [[nodiscard]] int prefix_sum(int j) const;
  /// Every tail sum is nonnegative.
  [[nodiscard]] bool tail_valid() const;
  [[nodiscard]] bool is_partition() const;
  [[nodiscard]] bool nonnegative() const;
  [[nodiscard]] Label sorted_desc() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;

private:
  std::vector<int> entries_;
};

using Exponent = std::vector<int>;

/// Thrown when a polynomial is not exactly divisible by x_j - x_k.
class NotDivisibleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Multivariate polynomial over the rationals in a fixed number of
/// variables. Terms are kept in an ordered map (canonical iteration order)
/// and zero coefficients are never stored.
class SymPoly {
public:
  explicit SymPoly(int nvars = 0) : nvars_(nvars) {}
  static SymPoly constant(int nvars, const Rational& c);
  static SymPoly monomial(const Exponent& e, const Rational& c = Rational(1));
  static SymPoly variable(int nvars, int j);

  [[nodiscard]] int nvars() const { return nvars_; }
  [[nodiscard]] const std::map<Exponent, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int total_degree() const;
  [[nodiscard]] bool is_homogeneous(int degree) const;
  [[nodiscard]] Rational coeff(const Exponent& e) const;

  void add_term(const Exponent& e, const Rational& c);

  [[nodiscard]] SymPoly derivative(int j) const;
  [[nodiscard]] SymPoly times_variable(int j) const;
  /// Variable i of the result is variable perm[i] of *this.
  [[nodiscard]] SymPoly permuted(const std::vector<int>& perm) const;
  /// Invariant under every permutation of the variables.
  [[nodiscard]] bool is_symmetric() const;
  [[nodiscard]] std::string to_string(const std::string& var = "x") const;

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const Rational& s);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator-(SymPoly a) { return a *= Rational(-1); }
  friend SymPoly operator*(SymPoly a, const Rational& s) { return a *= s; }
  friend SymPoly operator*(const Rational& s, SymPoly a) { return a *= s; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend bool operator==(const SymPoly&, const SymPoly&) = default;

private:
  void check_same_arity(const SymPoly& o) const;

  int nvars_;
  std::map<Exponent, Rational> terms_;
};

/// Coefficients of a symmetric polynomial in the basis M_m, keyed by
/// partitions.
using MExpansion = std::map<Label, Rational>;

/// M_a = sum over all permutations P of x_{P(1)}^{a_1}...x_{P(N)}^{a_N}.
/// Non-partition input gives M of the sorted label. Throws
/// std::invalid_argument on a negative entry.
SymPoly msym(const Label& a);

/// Throws std::invalid_argument if p is not symmetric.
MExpansion to_msym(const SymPoly& p);
SymPoly from_msym(int nvars, const MExpansion& expansion);

/// The M-term with the largest partition under (weight, lexicographic)
/// order, which refines dominance. Throws on the zero polynomial.
std::pair<Label, Rational> leading_msym_term(const SymPoly& p);

/// q / (x_j - x_k), by synthetic division along x_j with x_k treated as a
/// parameter. Throws NotDivisibleError if the remainder is nonzero.
SymPoly divide_by_difference(const SymPoly& q, int j, int k);

enum class Order { dominance, tail };

/// Dominance: prefix sums of m bounded by those of n. Tail: suffix sums of
/// m bounded by those of n. Strict dominance additionally needs
/// |m| != |n|; strict tail order needs m != n.
bool compare(Order order, const Label& m, const Label& n, bool strict = false);

/// Partitions of exactly `weight` into at most nparts parts, zero padded,
/// in decreasing lexicographic order.
std::vector<Label> partitions(int nparts, int weight);
std::vector<Label> partitions_up_to(int nparts, int max_weight);

/// Labels with 0 <= |n| <= max_weight, |n_j| <= bound and every tail sum
/// nonnegative, in increasing (weight, lexicographic) order.
std::vector<Label> tail_valid_labels(int nparts, int max_weight, int bound);

}  // namespace calogero
