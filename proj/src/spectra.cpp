#include "calogero/spectra.hpp"

#include "calogero/cbasis.hpp"
#include "calogero/exact.hpp"

#include <functional>
#include <stdexcept>

namespace calogero {

std::string to_string(Method m) {
  switch (m) {
    case Method::theorem1: return "theorem1";
    case Method::theorem2: return "theorem2";
    case Method::bmodel: return "bmodel";
    case Method::sutherland: return "sutherland";
  }
  return "?";
}

Method parse_method(const std::string& s) {
  if (s == "theorem1") return Method::theorem1;
  if (s == "theorem2") return Method::theorem2;
  if (s == "bmodel") return Method::bmodel;
  if (s == "sutherland") return Method::sutherland;
  throw std::invalid_argument("unknown method '" + s + "'");
}

bool method_supports(Method method, Model model) {
  return (method == Method::bmodel) == (model == Model::B);
}

std::vector<Method> methods_for(Model model) {
  if (model == Model::B) return {Method::bmodel};
  return {Method::theorem1, Method::theorem2, Method::sutherland};
}

Rational CoeffTable::at(const Label& m) const {
  auto it = entries.find(m);
  return it == entries.end() ? Rational(0) : it->second;
}

Label step_shift(Method method, const StepDescriptor& s, int nparts) {
  Label e = Label::zeros(nparts);
  const bool diag = s.j == s.k;
  switch (method) {
    case Method::theorem1:
      if (diag) {
        e[s.j] = 2;
      } else {
        e[s.j] = 1 - s.nu;
        e[s.k] = 1 + s.nu;
      }
      break;
    case Method::bmodel:
      if (diag) {
        e[s.j] = 1;
      } else {
        e[s.j] = 1 - s.nu;
        e[s.k] = s.nu;
      }
      break;
    case Method::theorem2:
      e[s.j] = 1 + 2 * s.t - s.nu;
      e[s.k] = 1 + 2 * s.u + s.nu;
      break;
    case Method::sutherland:
      throw std::invalid_argument("step_shift: the monomial solver has no step descriptors");
  }
  return e;
}

namespace {

Label minus(const Label& a, const Label& b) {
  Label r = a;
  for (int i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

// m~_j = m_j + lambda(N + 1 - j), with j 1-based.
Rational shifted(const Label& m, int j, const Rational& lambda) {
  return Rational(m[j]) + lambda * Rational(m.size() - j);
}

// Calls visit(step, target) for every step leading from `source` to a
// tail-valid target. Ranges of nu, t, u follow from the tail-sum bounds.
void for_each_step(Method method, const Label& source, const std::function<void(const StepDescriptor&, const Label&)>& visit) {
  const int len = source.size();
  auto emit = [&](const StepDescriptor& s) {
    Label target = minus(source, step_shift(method, s, len));
    if (target.tail_valid()) visit(s, target);
  };
  if (method == Method::theorem1 || method == Method::bmodel)
    for (int j = 0; j < len; ++j) emit(StepDescriptor{j, j, 0, 0, 0});
  for (int j = 0; j < len; ++j)
    for (int k = j + 1; k < len; ++k) {
      const int tail_k = source.tail_sum(k);
      const int tail_j = source.tail_sum(j);
      switch (method) {
        case Method::theorem1:
          for (int nu = 1; nu + 1 <= tail_k; ++nu) emit(StepDescriptor{j, k, nu, 0, 0});
          break;
        case Method::bmodel:
          for (int nu = 1; nu <= tail_k; ++nu) emit(StepDescriptor{j, k, nu, 0, 0});
          break;
        case Method::theorem2:
          for (int nu = 1; nu + 1 <= tail_k; ++nu)
            for (int u = 0; 1 + 2 * u + nu <= tail_k; ++u)
              for (int t = 0; t <= nu - 1 && 2 + 2 * t + 2 * u <= tail_j; ++t) emit(StepDescriptor{j, k, nu, t, u});
          break;
        case Method::sutherland:
          break;
      }
    }
}

// Coefficient g of a step, evaluated at its lower (target) label m.
Rational step_coeff(Method method, const StepDescriptor& s, const Label& m, const ModelParams& params) {
  const Rational& lambda = params.lambda;
  const Rational pair = lambda * (lambda - Rational(1));
  const Rational mj = shifted(m, s.j, lambda);
  switch (method) {
    case Method::theorem1:
      if (s.j == s.k) return -mj * (mj + Rational(1));
      return Rational(2) * pair * Rational(s.nu);
    case Method::bmodel:
      if (s.j == s.k) return Rational(-2) * (Rational(2) * (mj + *params.mu - lambda) + Rational(1)) * mj;
      return Rational(4) * pair * Rational(2 * s.nu - 1);
    case Method::theorem2: {
      // The b arguments are taken at m~ - 1 plus the shift, matching the
      // c_s(n~ - 1) used to build f^(H).
      const Rational mk = shifted(m, s.k, lambda);
      return Rational(2) * pair * Rational(s.nu) *
             b_coeff(s.nu - 1, mj + Rational(2 * s.t - s.nu), s.t) *
             b_coeff(-1 - s.nu, mk + Rational(2 * s.u + s.nu), s.u);
    }
    case Method::sutherland:
      break;
  }
  throw std::logic_error("step_coeff: unsupported method");
}

// Top-down solve: labels are finalized level by level in decreasing weight;
// every step strictly lowers the weight, so each level only receives
// contributions from finished levels.
CoeffTable triangular_solve(const Label& n, const ModelParams& params, Method method) {
  if (n.size() != params.N) throw std::invalid_argument("label length differs from N");
  CoeffTable table{n, {}, method};
  if (!n.tail_valid()) {
    table.entries.emplace(n, Rational(1));
    return table;
  }
  const int gap_unit = method == Method::bmodel ? 4 : 2;
  std::map<int, std::map<Label, Rational>, std::greater<>> levels;
  levels[n.weight()].emplace(n, Rational(0));
  for (auto& [weight, level] : levels) {
    for (auto& [m, acc] : level) {
      const Rational value = m == n ? Rational(1) : acc / Rational(gap_unit * (n.weight() - weight));
      if (value.is_zero()) continue;
      table.entries.emplace(m, value);
      for_each_step(method, m, [&](const StepDescriptor& s, const Label& target) {
        const Rational g = step_coeff(method, s, target, params);
        if (g.is_zero()) return;
        auto [it, inserted] = levels[target.weight()].try_emplace(target, Rational(0));
        it->second += g * value;
      });
    }
  }
  return table;
}

void require_model(const ModelParams& params, Model model, const char* who) {
  params.validate();
  if (params.model != model) throw std::invalid_argument(std::string(who) + ": wrong model");
}

}  // namespace

CoeffTable alpha_table(const Label& n, const ModelParams& params) {
  require_model(params, Model::A, "alpha_table");
  return triangular_solve(n, params, Method::theorem1);
}

CoeffTable beta_table(const Label& n, const ModelParams& params) {
  require_model(params, Model::A, "beta_table");
  return triangular_solve(n, params, Method::theorem2);
}

CoeffTable alphaB_table(const Label& n, const ModelParams& params) {
  require_model(params, Model::B, "alphaB_table");
  return triangular_solve(n, params, Method::bmodel);
}

CoeffTable sutherland_table(const Label& n, const ModelParams& params, SutherlandMode mode) {
  require_model(params, Model::A, "sutherland_table");
  if (!n.is_partition()) throw std::invalid_argument("sutherland_table: " + n.to_string() + " is not a partition");
  if (n.size() != params.N) throw std::invalid_argument("label length differs from N");
  CoeffTable table{n, {}, Method::sutherland};
  std::map<Label, MExpansion> rows;
  auto row = [&](const Label& k) -> const MExpansion& {
    auto it = rows.find(k);
    if (it == rows.end()) it = rows.emplace(k, monomial_action(k, params).entries).first;
    return it->second;
  };
  const int top = n.weight();

  if (mode == SutherlandMode::recursion) {
    std::map<int, std::map<Label, Rational>, std::greater<>> levels;
    levels[top].emplace(n, Rational(0));
    for (auto& [weight, level] : levels)
      for (auto& [m, acc] : level) {
        const Rational value = m == n ? Rational(1) : acc / Rational(2 * (top - weight));
        if (value.is_zero()) continue;
        table.entries.emplace(m, value);
        for (const auto& [target, b] : row(m)) {
          auto [it, inserted] = levels[target.weight()].try_emplace(target, Rational(0));
          it->second += b * value;
        }
      }
    return table;
  }

  // Geometric-series inversion: sum over chains m < k_s < ... < k_1 < n in
  // strict dominance, each intermediate k contributing 1/(2(|n| - |k|)).
  std::vector<Label> below;
  for (const auto& p : partitions_up_to(n.size(), top - 1))
    if (compare(Order::dominance, p, n, true)) below.push_back(p);
  table.entries.emplace(n, Rational(1));
  std::function<void(const Label&, const Rational&)> descend = [&](const Label& k, const Rational& prefix) {
    const MExpansion& bk = row(k);
    for (const auto& m : below) {
      if (!compare(Order::dominance, m, k, true)) continue;
      auto it = bk.find(m);
      if (it == bk.end()) continue;
      const Rational term = prefix * it->second / Rational(2 * (top - m.weight()));
      table.entries[m] += term;
      descend(m, term);
    }
  };
  descend(n, Rational(1));
  std::erase_if(table.entries, [](const auto& kv) { return kv.second.is_zero(); });
  return table;
}

std::map<Label, Rational> alpha_series(const Label& n, const ModelParams& params) {
  require_model(params, Model::A, "alpha_series");
  std::map<Label, Rational> out;
  out[n] = Rational(1);
  if (!n.tail_valid()) return out;
  // Ordered chains n = c_0 -> c_1 -> ... -> c_s; the r-th link carries
  // g(nu_r; c_r) / (4r), so a chain of length s carries prod g / (4^s s!).
  std::function<void(const Label&, int, const Rational&)> walk = [&](const Label& c, int depth,
                                                                   const Rational& weight) {
    for_each_step(Method::theorem1, c, [&](const StepDescriptor& s, const Label& next) {
      const Rational g = step_coeff(Method::theorem1, s, next, params);
      if (g.is_zero()) return;
      const Rational w = weight * g / Rational(4 * (depth + 1));
      out[next] += w;
      walk(next, depth + 1, w);
    });
  };
  walk(n, 0, Rational(1));
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

SymPoly assemble(const CoeffTable& table, const ModelParams& params) {
  SymPoly p(params.N);
  for (const auto& [m, c] : table.entries) {
    switch (table.method) {
      case Method::theorem1:
      case Method::bmodel: p += f_expand(m, params) * c; break;
      case Method::theorem2: p += fH_expand(m, params) * c; break;
      case Method::sutherland: p += msym(m) * c; break;
    }
  }
  return p;
}

EigenRecord solve(const Label& n, const ModelParams& params, Method method) {
  params.validate();
  if (!method_supports(method, params.model))
    throw std::invalid_argument("method " + to_string(method) + " does not apply to model " + to_string(params.model));
  if (n.size() != params.N)
    throw std::invalid_argument("label " + n.to_string() + " does not have " + std::to_string(params.N) + " entries");
  CoeffTable table;
  switch (method) {
    case Method::theorem1: table = alpha_table(n, params); break;
    case Method::theorem2: table = beta_table(n, params); break;
    case Method::bmodel: table = alphaB_table(n, params); break;
    case Method::sutherland: table = sutherland_table(n, params); break;
  }
  SymPoly poly = assemble(table, params);
  return EigenRecord{params, n, method, energy(params, n), std::move(table), std::move(poly)};
}

}  // namespace calogero
