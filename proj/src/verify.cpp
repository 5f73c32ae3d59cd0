#include "calogero/verify.hpp"

#include "calogero/cbasis.hpp"

#include <algorithm>
#include <numeric>

namespace calogero {

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void VerifyReport::add(Check c) {
  if (c.pass) {
    c.residual.reset();
    c.detail.clear();
  }
  checks.push_back(std::move(c));
}

void VerifyReport::merge(const VerifyReport& other) {
  for (const auto& c : other.checks) {
    Check copy = c;
    copy.name = other.subject + ": " + c.name;
    checks.push_back(std::move(copy));
  }
  relations.insert(relations.end(), other.relations.begin(), other.relations.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

namespace {

UniPoly to_uni(const SymPoly& p) {
  if (p.nvars() != 1) throw std::invalid_argument("to_uni: expected one variable");
  UniPoly u;
  for (const auto& [e, c] : p.terms()) u.add_term(e[0], c);
  return u;
}

std::pair<Exponent, Rational> leading_raw(const SymPoly& p) { return *p.terms().rbegin(); }

std::string describe(const ModelParams& p) {
  std::string s = "model " + to_string(p.model) + " N=" + std::to_string(p.N) + " lambda=" + p.lambda.to_string();
  if (p.mu) s += " mu=" + p.mu->to_string();
  return s;
}

Check proportional_check(const std::string& name, const UniPoly& got, const UniPoly& want) {
  Check c{name, proportional(got, want), std::nullopt, {}};
  if (!c.pass) c.detail = "got " + got.to_string() + ", expected a multiple of " + want.to_string();
  return c;
}

Check equal_check(const std::string& name, const UniPoly& got, const UniPoly& want) {
  Check c{name, got == want, std::nullopt, {}};
  if (!c.pass) c.detail = "left " + got.to_string() + ", right " + want.to_string();
  return c;
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

std::optional<Rational> proportionality(const SymPoly& a, const SymPoly& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  Rational ca;
  Rational cb;
  if (a.is_symmetric() && b.is_symmetric()) {
    const auto [lead, coeff] = leading_msym_term(a);
    const auto mb = to_msym(b);
    auto it = mb.find(lead);
    if (it == mb.end()) return std::nullopt;
    ca = coeff;
    cb = it->second;
  } else {
    const auto [lead, coeff] = leading_raw(a);
    ca = coeff;
    cb = b.coeff(lead);
    if (cb.is_zero()) return std::nullopt;
  }
  if (!(a * cb == b * ca)) return std::nullopt;
  return ca / cb;
}

VerifyReport verify_eigen(const EigenRecord& rec) {
  VerifyReport report;
  report.subject = "eigen " + to_string(rec.method) + " n=" + rec.label.to_string() + " (" + describe(rec.params) + ")";
  const Rational shift = rec.energy - ground_energy(rec.params);
  Check eig{"eigen-equation", true, std::nullopt, {}};
  try {
    SymPoly residual = apply_reduced(rec.poly, rec.params) - rec.poly * shift;
    if (!residual.is_zero()) {
      eig.pass = false;
      eig.detail = "nonzero residual";
      eig.residual = std::move(residual);
    }
  } catch (const NotDivisibleError& e) {
    eig.pass = false;
    eig.detail = std::string("operator not applicable: ") + e.what();
  }
  report.add(std::move(eig));

  const Rational expected = energy(rec.params, rec.label);
  Check en{"energy", rec.energy == expected, std::nullopt, {}};
  if (!en.pass) en.detail = "recorded " + rec.energy.to_string() + ", formula gives " + expected.to_string();
  report.add(std::move(en));

  Check nz{"nonzero", !rec.poly.is_zero(), std::nullopt, {}};
  if (!nz.pass) nz.detail = "eigenfunction vanishes identically";
  report.add(std::move(nz));
  return report;
}

VerifyReport verify_reductions(const ModelParams& params, int max_n) {
  params.validate();
  if (params.N != 1) throw std::invalid_argument("verify_reductions: N must be 1");
  VerifyReport report;
  report.subject = "reductions (" + describe(params) + ")";
  for (int n = 0; n <= max_n; ++n) {
    const Label label{n};
    for (Method method : methods_for(params.model)) {
      const UniPoly got = to_uni(solve(label, params, method).poly);
      const std::string name = to_string(method) + " n=" + std::to_string(n);
      if (params.model == Model::A)
        report.add(proportional_check(name + " ~ H_n", got, classical_poly(ClassicalKind::hermite, n)));
      else
        report.add(proportional_check(name + " ~ L_n", got,
                                      classical_poly(ClassicalKind::laguerre, n, *params.mu - Rational(1, 2))));
    }
  }

  if (!params.lambda.is_integer() || params.lambda < Rational(3)) return report;
  const int m = static_cast<int>(params.lambda.to_long()) - 1;
  for (int n = 0; n <= max_n; ++n) {
    if (params.model == Model::A) {
      const UniPoly lhs = classical_poly(ClassicalKind::hermite, n);
      const UniPoly rhs = classical_poly(ClassicalKind::hermite, n + m).derivative(m) *
                          (factorial(n) / (pow(Rational(2), m) * factorial(n + m)));
      report.add(equal_check("derivative identity H n=" + std::to_string(n), lhs, rhs));
    } else {
      const Rational a = *params.mu - Rational(1, 2);
      const UniPoly lhs = classical_poly(ClassicalKind::laguerre, n, a);
      UniPoly rhs = classical_poly(ClassicalKind::laguerre, n + m, a - Rational(m)).derivative(m);
      if (m % 2 != 0) rhs *= Rational(-1);
      report.add(equal_check("derivative identity L n=" + std::to_string(n), lhs, rhs));
    }
  }
  return report;
}

SymPoly schur_polynomial(const Label& n) {
  const int len = n.size();
  std::vector<int> perm(static_cast<std::size_t>(len));
  std::iota(perm.begin(), perm.end(), 0);
  SymPoly alt(len);
  do {
    Exponent e(static_cast<std::size_t>(len), 0);
    for (int i = 0; i < len; ++i) e[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = n[i] + len - 1 - i;
    alt.add_term(e, Rational(permutation_sign(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int j = 0; j < len; ++j)
    for (int k = j + 1; k < len; ++k) alt = divide_by_difference(alt, j, k);
  return alt;
}

VerifyReport verify_schur(int N, int max_weight) {
  VerifyReport report;
  report.subject = "schur N=" + std::to_string(N);
  const ModelParams params = ModelParams::a(N, Rational(1));
  for (const Label& n : partitions_up_to(N, max_weight)) {
    const SymPoly f = f_expand(n, params);
    const SymPoly s = schur_polynomial(n);
    Check c{"f" + n.to_string() + " = +-s" + n.to_string(), true, std::nullopt, {}};
    if (f == s) {
      report.notes.push_back("sign " + n.to_string() + " +1");
    } else if (f == -s) {
      report.notes.push_back("sign " + n.to_string() + " -1");
    } else {
      c.pass = false;
      c.detail = "f minus s";
      c.residual = f - s;
    }
    report.add(std::move(c));
  }
  return report;
}

VerifyReport cross_check(const Label& n, const ModelParams& params) {
  VerifyReport report;
  report.subject = "cross-check n=" + n.to_string() + " (" + describe(params) + ")";
  std::vector<EigenRecord> records;
  for (Method method : methods_for(params.model)) {
    if (method == Method::sutherland && !n.is_partition()) continue;
    records.push_back(solve(n, params, method));
    report.merge(verify_eigen(records.back()));
  }
  for (std::size_t i = 0; i < records.size(); ++i)
    for (std::size_t j = i + 1; j < records.size(); ++j) {
      Relation r{to_string(records[i].method), to_string(records[j].method), false, false, std::nullopt};
      r.equal = records[i].poly == records[j].poly;
      r.ratio = proportionality(records[i].poly, records[j].poly);
      r.proportional = r.ratio.has_value();
      report.relations.push_back(std::move(r));
    }

  if (params.model == Model::A && !records.empty() && !records.front().poly.is_zero()) {
    // Top-weight M-coefficients of P_n fix the only candidate combination of
    // the monomial-basis eigenfunctions (each is M_m plus lower weights).
    const SymPoly& p = records.front().poly;
    SymPoly combo(params.N);
    for (const auto& [m, c] : to_msym(p))
      if (m.weight() == n.weight()) combo += solve(m, params, Method::sutherland).poly * c;
    report.notes.push_back(to_string(records.front().method) + " " +
                           (combo == p ? "lies in" : "is outside") +
                           " the span of the sutherland eigenfunctions of weight " + std::to_string(n.weight()));
  }
  return report;
}

VerifyReport relation_probe(const Label& a, const Label& b, const ModelParams& params) {
  VerifyReport report;
  report.subject = "relation " + a.to_string() + " vs " + b.to_string() + " (" + describe(params) + ")";
  const Method method = methods_for(params.model).front();
  const EigenRecord ra = solve(a, params, method);
  const EigenRecord rb = solve(b, params, method);
  report.merge(verify_eigen(ra));
  report.merge(verify_eigen(rb));
  report.notes.push_back(ra.energy == rb.energy ? "same energy " + ra.energy.to_string()
                                                : "energies " + ra.energy.to_string() + " and " + rb.energy.to_string());

  auto relate = [&](const std::string& left, const std::string& right, const SymPoly& pl, const SymPoly& pr) {
    Relation r{left, right, pl == pr, false, proportionality(pl, pr)};
    r.proportional = r.ratio.has_value();
    report.relations.push_back(std::move(r));
  };
  relate("P" + b.to_string(), "P" + a.to_string(), rb.poly, ra.poly);
  relate("f" + b.to_string(), "f" + a.to_string(), f_expand(b, params), f_expand(a, params));
  return report;
}

}  // namespace calogero
