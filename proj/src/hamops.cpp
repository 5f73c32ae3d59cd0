#include "calogero/hamops.hpp"

#include "calogero/exact.hpp"

#include <numeric>
#include <stdexcept>

namespace calogero {

std::string to_string(Model m) { return m == Model::A ? "A" : "B"; }

Model parse_model(const std::string& s) {
  if (s == "a" || s == "A") return Model::A;
  if (s == "b" || s == "B") return Model::B;
  throw std::invalid_argument("unknown model '" + s + "' (expected a or b)");
}

ModelParams ModelParams::a(int n, Rational lambda) {
  ModelParams p{Model::A, n, std::move(lambda), std::nullopt};
  p.validate();
  return p;
}

ModelParams ModelParams::b(int n, Rational lambda, Rational mu) {
  ModelParams p{Model::B, n, std::move(lambda), std::move(mu)};
  p.validate();
  return p;
}

void ModelParams::validate() const {
  if (N < 1) throw std::invalid_argument("particle number must be positive");
  if (lambda.is_zero()) throw std::invalid_argument("lambda must be nonzero");
  if (model == Model::B && !mu) throw std::invalid_argument("model B requires mu");
  if (model == Model::A && mu) throw std::invalid_argument("mu is only meaningful for model B");
}

Rational ground_energy(const ModelParams& params) {
  const Rational n(params.N);
  if (params.model == Model::A) return n * (Rational(1) + params.lambda * Rational(params.N - 1));
  return n * (Rational(1) + Rational(2) * *params.mu + Rational(2) * params.lambda * Rational(params.N - 1));
}

Rational energy(const ModelParams& params, const Label& n) {
  const int step = params.model == Model::A ? 2 : 4;
  return Rational(step * n.weight()) + ground_energy(params);
}

SymPoly apply_reduced_A(const SymPoly& p, const ModelParams& params) {
  const int nv = p.nvars();
  SymPoly out(nv);
  std::vector<SymPoly> d1;
  d1.reserve(static_cast<std::size_t>(nv));
  for (int j = 0; j < nv; ++j) d1.push_back(p.derivative(j));
  for (int j = 0; j < nv; ++j) {
    out -= d1[static_cast<std::size_t>(j)].derivative(j);
    out += d1[static_cast<std::size_t>(j)].times_variable(j) * Rational(2);
  }
  const Rational pair_coupling = Rational(-2) * params.lambda;
  for (int j = 0; j < nv; ++j)
    for (int k = j + 1; k < nv; ++k)
      out += divide_by_difference(d1[static_cast<std::size_t>(j)] - d1[static_cast<std::size_t>(k)], j, k) *
             pair_coupling;
  return out;
}

SymPoly apply_reduced_B(const SymPoly& q, const ModelParams& params) {
  if (!params.mu) throw std::invalid_argument("apply_reduced_B: mu missing");
  const int nv = q.nvars();
  SymPoly out(nv);
  const Rational drift = Rational(-2) - Rational(4) * *params.mu;
  std::vector<SymPoly> zd;  // z_j d_j q
  zd.reserve(static_cast<std::size_t>(nv));
  for (int j = 0; j < nv; ++j) {
    const SymPoly d = q.derivative(j);
    SymPoly zdj = d.times_variable(j);
    out -= d.derivative(j).times_variable(j) * Rational(4);
    out += zdj * Rational(4);
    out += d * drift;
    zd.push_back(std::move(zdj));
  }
  const Rational pair_coupling = Rational(-8) * params.lambda;
  for (int j = 0; j < nv; ++j)
    for (int k = j + 1; k < nv; ++k)
      out += divide_by_difference(zd[static_cast<std::size_t>(j)] - zd[static_cast<std::size_t>(k)], j, k) *
             pair_coupling;
  return out;
}

SymPoly apply_reduced(const SymPoly& p, const ModelParams& params) {
  return params.model == Model::A ? apply_reduced_A(p, params) : apply_reduced_B(p, params);
}

ActionRow monomial_action(const Label& n, const ModelParams& params) {
  if (!n.is_partition()) throw std::invalid_argument("monomial_action: " + n.to_string() + " is not a partition");
  const SymPoly m = msym(n);
  SymPoly rest = apply_reduced_A(m, params) - m * Rational(2 * n.weight());
  return ActionRow{n, to_msym(rest)};
}

ActionRow monomial_action_printed(const Label& n, const ModelParams& params) {
  if (!n.is_partition()) throw std::invalid_argument("monomial_action_printed: not a partition");
  const int len = n.size();
  MExpansion acc;
  auto add = [&acc](Label target, const Rational& c) {
    if (c.is_zero()) return;
    auto key = target.sorted_desc();
    auto [it, inserted] = acc.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) acc.erase(it);
    }
  };
  for (int j = 0; j < len; ++j) {
    if (n[j] < 2) continue;
    Label t = n;
    t[j] -= 2;
    add(t, Rational(-n[j] * (n[j] - 1)));
  }
  for (int j = 0; j < len; ++j)
    for (int k = j + 1; k < len; ++k) {
      const int gap = n[j] - n[k];
      for (int nu = 0; nu <= gap / 2; ++nu) {
        const int mult = (2 * nu == gap) ? 1 : 2;
        const int factor = (nu == 0 ? 0 : n[j]) - n[k];
        if (factor == 0) continue;
        Label t = n;
        t[j] -= nu + 1;
        t[k] += nu - 1;
        add(t, -params.lambda * Rational(mult * factor));
      }
    }
  return ActionRow{n, acc};
}

SymPoly pair_quotient_formula(int n, int m) {
  if (m < 0 || n < m) throw std::invalid_argument("pair_quotient_formula: need n >= m >= 0");
  SymPoly r(2);
  for (int k = 1; k <= n - m - 1; ++k) r.add_term({n - 1 - k, m - 1 + k}, Rational(n - m));
  if (m > 0) {
    r.add_term({n - 1, m - 1}, Rational(-m));
    r.add_term({m - 1, n - 1}, Rational(-m));
  }
  return r;
}

namespace {

SymPoly uni_in(const UniPoly& u, int var) {
  SymPoly p(2);
  for (const auto& [d, c] : u.terms()) {
    Exponent e{0, 0};
    e[static_cast<std::size_t>(var)] = d;
    p.add_term(e, c);
  }
  return p;
}

}  // namespace

SymPoly symmetrized_hermite_product(int a, int b) {
  const auto ha = classical_poly(ClassicalKind::hermite, a);
  const auto hb = classical_poly(ClassicalKind::hermite, b);
  return uni_in(ha, 0) * uni_in(hb, 1) + uni_in(ha, 1) * uni_in(hb, 0);
}

std::map<std::pair<int, int>, Rational> pair_coeffs_hermite(int n, int m) {
  if (m < 0 || n < m) throw std::invalid_argument("pair_coeffs_hermite: need n >= m >= 0");
  const SymPoly s = symmetrized_hermite_product(n, m);
  SymPoly rest = divide_by_difference(s.derivative(0) - s.derivative(1), 0, 1);
  std::map<std::pair<int, int>, Rational> coeffs;
  // The top-degree part of H_a(x)H_b(y) + H_a(y)H_b(x) is
  // 2^{a+b}(x^a y^b + x^b y^a), so peeling off the (degree, lex)-largest
  // term is a triangular solve.
  while (!rest.is_zero()) {
    const Exponent* lead = nullptr;
    int lead_deg = -1;
    for (const auto& [e, c] : rest.terms()) {
      const int d = e[0] + e[1];
      if (d > lead_deg || (d == lead_deg && e > *lead)) {
        lead = &e;
        lead_deg = d;
      }
    }
    const int a = (*lead)[0];
    const int b = (*lead)[1];
    if (a + b > n + m - 2 || (a + b - n - m) % 2 != 0)
      throw std::runtime_error("pair_coeffs_hermite: quotient leaves the symmetrized Hermite span at x^" +
                               std::to_string(a) + " y^" + std::to_string(b));
    const SymPoly basis = symmetrized_hermite_product(a, b);
    const Rational c = rest.coeff(*lead) / basis.coeff({a, b});
    coeffs[{a, b}] += c;
    rest -= basis * c;
  }
  return coeffs;
}

}  // namespace calogero
