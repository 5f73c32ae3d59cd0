#include "calogero/sympoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace calogero {

int Label::weight() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

int Label::tail_sum(int j) const {
  return std::accumulate(entries_.begin() + j, entries_.end(), 0);
}

int Label::prefix_sum(int j) const {
  return std::accumulate(entries_.begin(), entries_.begin() + j + 1, 0);
}

bool Label::tail_valid() const {
  int acc = 0;
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    acc += *it;
    if (acc < 0) return false;
  }
  return true;
}

bool Label::is_partition() const {
  return nonnegative() && std::is_sorted(entries_.begin(), entries_.end(), std::greater<>());
}

bool Label::nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v >= 0; });
}

Label Label::sorted_desc() const {
  auto e = entries_;
  std::sort(e.begin(), e.end(), std::greater<>());
  return Label(std::move(e));
}

std::string Label::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

SymPoly SymPoly::constant(int nvars, const Rational& c) {
  SymPoly p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

SymPoly SymPoly::monomial(const Exponent& e, const Rational& c) {
  SymPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

SymPoly SymPoly::variable(int nvars, int j) {
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(j)] = 1;
  return monomial(e);
}

int SymPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool SymPoly::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(), [degree](const auto& t) {
    return std::accumulate(t.first.begin(), t.first.end(), 0) == degree;
  });
}

Rational SymPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymPoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("SymPoly: exponent arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SymPoly::check_same_arity(const SymPoly& o) const {
  if (o.nvars_ != nvars_ && !o.is_zero() && !is_zero())
    throw std::invalid_argument("SymPoly: variable count mismatch");
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  check_same_arity(o);
  if (is_zero()) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  check_same_arity(o);
  if (is_zero()) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  a.check_same_arity(b);
  SymPoly r(std::max(a.nvars_, b.nvars_));
  Exponent e(static_cast<std::size_t>(r.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

SymPoly SymPoly::derivative(int j) const {
  SymPoly r(nvars_);
  const auto idx = static_cast<std::size_t>(j);
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponent d = e;
    --d[idx];
    r.add_term(d, c * Rational(e[idx]));
  }
  return r;
}

SymPoly SymPoly::times_variable(int j) const {
  SymPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent d = e;
    ++d[static_cast<std::size_t>(j)];
    r.terms_.emplace(std::move(d), c);
  }
  return r;
}

SymPoly SymPoly::permuted(const std::vector<int>& perm) const {
  SymPoly r(nvars_);
  Exponent d(static_cast<std::size_t>(nvars_));
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = e[static_cast<std::size_t>(perm[i])];
    r.add_term(d, c);
  }
  return r;
}

bool SymPoly::is_symmetric() const {
  // Adjacent transpositions generate S_N.
  std::vector<int> perm(static_cast<std::size_t>(nvars_));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = 0; i + 1 < nvars_; ++i) {
    auto p = perm;
    std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i) + 1]);
    if (permuted(p) != *this) return false;
  }
  return true;
}

std::string SymPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first, then reverse lexicographic exponent order.
  std::vector<const std::pair<const Exponent, Rational>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    const int da = std::accumulate(a->first.begin(), a->first.end(), 0);
    const int db = std::accumulate(b->first.begin(), b->first.end(), 0);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    const Rational mag = c.sign() < 0 ? -c : c;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    const bool constant = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
    if (constant) {
      os << mag;
      continue;
    }
    bool need_star = false;
    if (mag != Rational(1)) {
      os << mag;
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << var << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

SymPoly msym(const Label& a) {
  if (!a.nonnegative()) throw std::invalid_argument("msym: negative entry in " + a.to_string());
  const int n = a.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  SymPoly p(n);
  Exponent e(static_cast<std::size_t>(n));
  do {
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = a[i];
    p.add_term(e, Rational(1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return p;
}

namespace {

// Coefficient of x^lambda in M_lambda: the order of its stabilizer.
Rational stabilizer_order(const Label& partition) {
  Rational r(1);
  const auto& e = partition.entries();
  for (std::size_t i = 0; i < e.size();) {
    std::size_t j = i;
    while (j < e.size() && e[j] == e[i]) ++j;
    for (std::size_t k = 2; k <= j - i; ++k) r *= Rational(static_cast<long>(k));
    i = j;
  }
  return r;
}

}  // namespace

MExpansion to_msym(const SymPoly& p) {
  MExpansion out;
  for (const auto& [e, c] : p.terms()) {
    Label l(e);
    if (!l.is_partition()) continue;
    out.emplace(l, c / stabilizer_order(l));
  }
  if (from_msym(p.nvars(), out) != p) throw std::invalid_argument("to_msym: polynomial is not symmetric");
  return out;
}

SymPoly from_msym(int nvars, const MExpansion& expansion) {
  SymPoly p(nvars);
  for (const auto& [part, c] : expansion) p += msym(part) * c;
  return p;
}

std::pair<Label, Rational> leading_msym_term(const SymPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("leading_msym_term: zero polynomial");
  const auto expansion = to_msym(p);
  auto best = expansion.begin();
  for (auto it = expansion.begin(); it != expansion.end(); ++it) {
    const int wi = it->first.weight();
    const int wb = best->first.weight();
    if (wi > wb || (wi == wb && it->first > best->first)) best = it;
  }
  return *best;
}

SymPoly divide_by_difference(const SymPoly& q, int j, int k) {
  if (j == k) throw std::invalid_argument("divide_by_difference: j == k");
  const auto jj = static_cast<std::size_t>(j);
  const auto kk = static_cast<std::size_t>(k);
  SymPoly quotient(q.nvars());
  SymPoly rem = q;
  // Long division in x_j: peel off the top x_j-degree slice T and replace
  // it by (T / x_j) * x_k, which leaves rem - (T / x_j)(x_j - x_k).
  while (!rem.is_zero()) {
    int top = 0;
    for (const auto& [e, c] : rem.terms()) top = std::max(top, e[jj]);
    if (top == 0) break;
    SymPoly next(q.nvars());
    for (const auto& [e, c] : rem.terms()) {
      if (e[jj] != top) {
        next.add_term(e, c);
        continue;
      }
      Exponent lowered = e;
      --lowered[jj];
      quotient.add_term(lowered, c);
      ++lowered[kk];
      next.add_term(lowered, c);
    }
    rem = std::move(next);
  }
  if (!rem.is_zero())
    throw NotDivisibleError("divide_by_difference: remainder " + rem.to_string() + " modulo x" +
                            std::to_string(j + 1) + " - x" + std::to_string(k + 1));
  return quotient;
}

bool compare(Order order, const Label& m, const Label& n, bool strict) {
  if (m.size() != n.size()) throw std::invalid_argument("compare: label length mismatch");
  const int len = m.size();
  int sm = 0;
  int sn = 0;
  for (int j = 0; j < len; ++j) {
    const int idx = order == Order::dominance ? j : len - 1 - j;
    sm += m[idx];
    sn += n[idx];
    if (sm > sn) return false;
  }
  if (!strict) return true;
  return order == Order::dominance ? m.weight() != n.weight() : m != n;
}

namespace {

void partitions_rec(int remaining, int max_part, int slots, std::vector<int>& cur, std::vector<Label>& out) {
  if (slots == 0) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 0; --p) {
    if (p * slots < remaining) break;
    cur.push_back(p);
    partitions_rec(remaining - p, p, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Label> partitions(int nparts, int weight) {
  std::vector<Label> out;
  if (weight < 0 || nparts <= 0) return out;
  std::vector<int> cur;
  partitions_rec(weight, weight, nparts, cur, out);
  return out;
}

std::vector<Label> partitions_up_to(int nparts, int max_weight) {
  std::vector<Label> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto ps = partitions(nparts, w);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<Label> tail_valid_labels(int nparts, int max_weight, int bound) {
  std::vector<Label> out;
  std::vector<int> cur(static_cast<std::size_t>(nparts), -bound);
  while (true) {
    Label l(cur);
    if (l.weight() >= 0 && l.weight() <= max_weight && l.tail_valid()) out.push_back(l);
    int i = nparts - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == bound) cur[static_cast<std::size_t>(i--)] = -bound;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  std::stable_sort(out.begin(), out.end(), [](const Label& a, const Label& b) {
    return a.weight() != b.weight() ? a.weight() < b.weight() : a < b;
  });
  return out;
}

}  // namespace calogero
