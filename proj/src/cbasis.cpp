#include "calogero/cbasis.hpp"

#include "calogero/exact.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace calogero {

namespace {

using Grid = std::vector<std::vector<int>>;

Grid square(int n) {
  return Grid(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
}

// Calls visit(parts) for every composition of `total` into `slots`
// nonnegative parts.
template <typename F>
void for_each_composition(int total, int slots, std::vector<int>& parts, int index, F&& visit) {
  if (index == slots - 1) {
    parts[static_cast<std::size_t>(index)] = total;
    visit(parts);
    return;
  }
  for (int v = total; v >= 0; --v) {
    parts[static_cast<std::size_t>(index)] = v;
    for_each_composition(total - v, slots, parts, index + 1, visit);
  }
}

template <typename F>
void for_each_composition(int total, int slots, F&& visit) {
  std::vector<int> parts(static_cast<std::size_t>(slots), 0);
  if (slots == 0) {
    if (total == 0) visit(parts);
    return;
  }
  for_each_composition(total, slots, parts, 0, visit);
}

Rational signed_binom(const Rational& a, int k) {
  Rational r = gbinom(a, k);
  return k % 2 == 0 ? r : -r;
}

void solutions_from_column(const Label& n, int j, Grid& kappa, Grid& nu,
                           const std::function<void(const ConstraintSolution&)>& visit) {
  if (j < 0) {
    visit(ConstraintSolution{kappa, nu});
    return;
  }
  const int len = n.size();
  int budget = n[j];
  for (int l = j + 1; l < len; ++l) budget += kappa[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
  if (budget < 0) return;
  const auto col = static_cast<std::size_t>(j);
  for (int up = 0; up <= budget; ++up) {
    for_each_composition(up, j, [&](const std::vector<int>& ks) {
      for (std::size_t l = 0; l < ks.size(); ++l) kappa[l][col] = ks[l];
      for_each_composition(budget - up, len, [&](const std::vector<int>& vs) {
        for (std::size_t r = 0; r < vs.size(); ++r) nu[r][col] = vs[r];
        solutions_from_column(n, j - 1, kappa, nu, visit);
      });
    });
  }
  for (int l = 0; l < j; ++l) kappa[static_cast<std::size_t>(l)][col] = 0;
  for (int r = 0; r < len; ++r) nu[static_cast<std::size_t>(r)][col] = 0;
}

// Sum over nu-columns with fixed total c: the coefficient of t^c in
// prod_l (1 - t x_l)^{-lambda}.
SymPoly column_series(int nvars, int c, const Rational& lambda) {
  SymPoly g(nvars);
  std::vector<Rational> weights;
  for (int v = 0; v <= c; ++v) weights.push_back(pochhammer(lambda, v) / factorial(v));
  for_each_composition(c, nvars, [&](const std::vector<int>& vs) {
    Rational w(1);
    for (int v : vs) w *= weights[static_cast<std::size_t>(v)];
    g.add_term(vs, w);
  });
  return g;
}

struct MemoKey {
  std::string lambda;
  std::vector<int> label;
  friend auto operator<=>(const MemoKey&, const MemoKey&) = default;
};

struct Memo {
  std::shared_mutex mutex;
  std::map<MemoKey, SymPoly> table;
  std::shared_ptr<FExpansionStore> store;
};

Memo& memo() {
  static Memo m;
  return m;
}

}  // namespace

bool ConstraintSolution::satisfies(const Label& n) const {
  const int len = n.size();
  for (int j = 0; j < len; ++j) {
    const auto jj = static_cast<std::size_t>(j);
    int v = n[j];
    for (int l = 0; l < j; ++l) v -= kappa[static_cast<std::size_t>(l)][jj];
    for (int l = j + 1; l < len; ++l) v += kappa[jj][static_cast<std::size_t>(l)];
    for (int l = 0; l < len; ++l) v -= nu[static_cast<std::size_t>(l)][jj];
    if (v != 0) return false;
  }
  return true;
}

Rational ConstraintSolution::weight(const Rational& lambda) const {
  Rational w(1);
  const std::size_t len = nu.size();
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j) w *= signed_binom(lambda, kappa[i][j]);
  for (std::size_t r = 0; r < len; ++r)
    for (std::size_t s = 0; s < len; ++s) w *= signed_binom(-lambda, nu[r][s]);
  return w;
}

Exponent ConstraintSolution::monomial() const {
  Exponent e(nu.size(), 0);
  for (std::size_t r = 0; r < nu.size(); ++r)
    for (int v : nu[r]) e[r] += v;
  return e;
}

void for_each_solution(const Label& n, const std::function<void(const ConstraintSolution&)>& visit) {
  if (!n.tail_valid()) return;
  Grid kappa = square(n.size());
  Grid nu = square(n.size());
  solutions_from_column(n, n.size() - 1, kappa, nu, visit);
}

std::vector<ConstraintSolution> enumerate_solutions(const Label& n) {
  std::vector<ConstraintSolution> out;
  for_each_solution(n, [&out](const ConstraintSolution& s) { out.push_back(s); });
  return out;
}

SymPoly f_from_solutions(const Label& n, const Rational& lambda) {
  SymPoly f(n.size());
  for_each_solution(n, [&](const ConstraintSolution& s) { f.add_term(s.monomial(), s.weight(lambda)); });
  return f;
}

SymPoly f_expand_uncached(const Label& n, const Rational& lambda) {
  const int len = n.size();
  SymPoly f(len);
  if (!n.tail_valid()) return f;

  // Columns are resolved from j = N down to 1. Once the kappa entries of a
  // column are fixed, the nu entries of that column only contribute the
  // column_series factor for their total, so a state is (pending row
  // budgets, multiset of column totals) with a scalar weight.
  using State = std::pair<std::vector<int>, std::vector<int>>;
  std::map<State, Rational> states;
  states.emplace(State{std::vector<int>(static_cast<std::size_t>(len), 0), {}}, Rational(1));
  for (int j = len - 1; j >= 0; --j) {
    std::map<State, Rational> next;
    for (const auto& [state, w] : states) {
      const auto& [pending, totals] = state;
      const int budget = n[j] + pending[static_cast<std::size_t>(j)];
      if (budget < 0) continue;
      for (int up = 0; up <= budget; ++up) {
        for_each_composition(up, j, [&](const std::vector<int>& ks) {
          Rational c = w;
          std::vector<int> pend = pending;
          pend[static_cast<std::size_t>(j)] = 0;
          for (std::size_t l = 0; l < ks.size(); ++l) {
            c *= signed_binom(lambda, ks[l]);
            pend[l] += ks[l];
          }
          if (c.is_zero()) return;
          std::vector<int> tot = totals;
          tot.insert(std::upper_bound(tot.begin(), tot.end(), budget - up), budget - up);
          auto [it, inserted] = next.try_emplace(State{std::move(pend), std::move(tot)}, c);
          if (!inserted) it->second += c;
        });
      }
    }
    states = std::move(next);
  }

  std::map<int, SymPoly> series;
  auto series_for = [&](int c) -> const SymPoly& {
    auto it = series.find(c);
    if (it == series.end()) it = series.emplace(c, column_series(len, c, lambda)).first;
    return it->second;
  };
  for (const auto& [state, w] : states) {
    if (w.is_zero()) continue;
    SymPoly term = SymPoly::constant(len, w);
    for (int c : state.second) term = term * series_for(c);
    f += term;
  }
  return f;
}

SymPoly f_expand(const Label& n, const ModelParams& params) {
  if (n.size() != params.N) throw std::invalid_argument("f_expand: label length differs from N");
  if (!n.tail_valid()) return SymPoly(n.size());
  auto& m = memo();
  MemoKey key{params.lambda.to_string(), n.entries()};
  std::shared_ptr<FExpansionStore> store;
  {
    std::shared_lock lock(m.mutex);
    if (auto it = m.table.find(key); it != m.table.end()) return it->second;
    store = m.store;
  }
  std::optional<SymPoly> loaded = store ? store->load(params.lambda, n) : std::nullopt;
  SymPoly f = loaded ? std::move(*loaded) : f_expand_uncached(n, params.lambda);
  if (store && !loaded) store->store(params.lambda, n, f);
  std::unique_lock lock(m.mutex);
  m.table.insert_or_assign(std::move(key), f);
  return f;
}

SymPoly fH_expand(const Label& n, const ModelParams& params) {
  const int len = n.size();
  SymPoly out(len);
  if (!n.tail_valid()) return out;
  std::vector<Rational> shifted;  // n~_j - 1
  for (int j = 0; j < len; ++j) shifted.push_back(Rational(n[j] - 1) + params.lambda * Rational(len - j));
  Label shifted_label = n;
  // Choose s_j from the last index down, keeping the tail sums of n - 2s
  // nonnegative; anything else multiplies a vanishing f.
  std::function<void(int, int, const Rational&)> rec = [&](int j, int tail, const Rational& coeff) {
    if (j < 0) {
      out += f_expand(shifted_label, params) * coeff;
      return;
    }
    const int base = tail + n[j];
    for (int s = 0; base - 2 * s >= 0; ++s) {
      const Rational c = coeff * c_coeff(s, shifted[static_cast<std::size_t>(j)]);
      shifted_label[j] = n[j] - 2 * s;
      if (!c.is_zero()) rec(j - 1, base - 2 * s, c);
    }
    shifted_label[j] = n[j];
  };
  rec(len - 1, 0, Rational(1));
  return out;
}

void set_f_expansion_store(std::shared_ptr<FExpansionStore> store) {
  std::unique_lock lock(memo().mutex);
  memo().store = std::move(store);
}

void clear_f_expansion_memo() {
  std::unique_lock lock(memo().mutex);
  memo().table.clear();
}

std::size_t f_expansion_memo_size() {
  std::shared_lock lock(memo().mutex);
  return memo().table.size();
}

}  // namespace calogero
