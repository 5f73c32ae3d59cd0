#include "calogero/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace calogero {

Json rational_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) { return Rational::parse(j.get<std::string>()); }

Json label_json(const Label& n) { return Json(n.entries()); }

Label label_from_json(const Json& j) { return Label(j.get<std::vector<int>>()); }

Json poly_json(const SymPoly& p) {
  Json out;
  Json terms = Json::array();
  if (p.is_symmetric()) {
    out["basis"] = "msym";
    const MExpansion m = to_msym(p);
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
      Json t;
      t["partition"] = label_json(it->first);
      t["coeff"] = rational_json(it->second);
      terms.push_back(std::move(t));
    }
  } else {
    out["basis"] = "monomial";
    out["nvars"] = p.nvars();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      Json t;
      t["exponent"] = it->first;
      t["coeff"] = rational_json(it->second);
      terms.push_back(std::move(t));
    }
  }
  out["terms"] = std::move(terms);
  return out;
}

SymPoly poly_from_json(const Json& j, int nvars) {
  const std::string basis = j.at("basis").get<std::string>();
  if (basis == "msym") {
    MExpansion m;
    for (const auto& t : j.at("terms")) {
      Label lab = label_from_json(t.at("partition"));
      if (lab.size() != nvars) throw std::runtime_error("partition length differs from N");
      m[lab] = rational_from_json(t.at("coeff"));
    }
    return from_msym(nvars, m);
  }
  if (basis == "monomial") {
    SymPoly p(nvars);
    for (const auto& t : j.at("terms")) {
      auto e = t.at("exponent").get<Exponent>();
      if (static_cast<int>(e.size()) != nvars) throw std::runtime_error("exponent length differs from N");
      p.add_term(e, rational_from_json(t.at("coeff")));
    }
    return p;
  }
  throw std::runtime_error("unknown polynomial basis '" + basis + "'");
}

Json action_row_json(const ActionRow& row) {
  Json out;
  out["source"] = label_json(row.source);
  Json entries = Json::array();
  for (auto it = row.entries.rbegin(); it != row.entries.rend(); ++it) {
    Json t;
    t["partition"] = label_json(it->first);
    t["coeff"] = rational_json(it->second);
    entries.push_back(std::move(t));
  }
  out["entries"] = std::move(entries);
  return out;
}

Json record_json(const EigenRecord& rec) {
  Json out;
  out["model"] = to_string(rec.params.model);
  out["N"] = rec.params.N;
  out["lambda"] = rational_json(rec.params.lambda);
  out["mu"] = rec.params.mu ? rational_json(*rec.params.mu) : Json(nullptr);
  out["label"] = label_json(rec.label);
  out["method"] = to_string(rec.method);
  out["energy"] = rational_json(rec.energy);
  Json coeffs = Json::array();
  for (auto it = rec.coeffs.entries.rbegin(); it != rec.coeffs.entries.rend(); ++it) {
    Json t;
    t["label"] = label_json(it->first);
    t["coeff"] = rational_json(it->second);
    coeffs.push_back(std::move(t));
  }
  out["coeffs"] = std::move(coeffs);
  out["poly"] = poly_json(rec.poly);
  return out;
}

EigenRecord record_from_json(const Json& j) {
  EigenRecord rec;
  rec.params.model = parse_model(j.at("model").get<std::string>());
  rec.params.N = j.at("N").get<int>();
  rec.params.lambda = rational_from_json(j.at("lambda"));
  if (!j.at("mu").is_null()) rec.params.mu = rational_from_json(j.at("mu"));
  rec.params.validate();
  rec.label = label_from_json(j.at("label"));
  if (rec.label.size() != rec.params.N) throw std::runtime_error("label length differs from N");
  rec.method = parse_method(j.at("method").get<std::string>());
  rec.energy = rational_from_json(j.at("energy"));
  rec.coeffs.target = rec.label;
  rec.coeffs.method = rec.method;
  for (const auto& t : j.at("coeffs")) rec.coeffs.entries[label_from_json(t.at("label"))] = rational_from_json(t.at("coeff"));
  rec.poly = poly_from_json(j.at("poly"), rec.params.N);
  return rec;
}

Json report_json(const VerifyReport& report) {
  Json out;
  out["subject"] = report.subject;
  out["ok"] = report.ok();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json t;
    t["name"] = c.name;
    t["pass"] = c.pass;
    if (c.pass) {
      t["witness"] = nullptr;
    } else {
      Json w;
      w["detail"] = c.detail;
      w["residual"] = c.residual ? poly_json(*c.residual) : Json(nullptr);
      t["witness"] = std::move(w);
    }
    checks.push_back(std::move(t));
  }
  out["checks"] = std::move(checks);
  Json rels = Json::array();
  for (const auto& r : report.relations) {
    Json t;
    t["left"] = r.left;
    t["right"] = r.right;
    t["equal"] = r.equal;
    t["proportional"] = r.proportional;
    t["ratio"] = r.ratio ? rational_json(*r.ratio) : Json(nullptr);
    rels.push_back(std::move(t));
  }
  out["relations"] = std::move(rels);
  out["notes"] = report.notes;
  return out;
}

std::string variable_name(Model model) { return model == Model::A ? "x" : "z"; }

namespace {

std::vector<std::pair<Label, Rational>> by_weight_desc(const MExpansion& m) {
  std::vector<std::pair<Label, Rational>> v(m.begin(), m.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.first.weight() != b.first.weight()) return a.first.weight() > b.first.weight();
    return a.first > b.first;
  });
  return v;
}

std::string latex_rational(const Rational& r) {
  const std::string s = r.to_string();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return s;
  return "\\frac{" + s.substr(0, slash) + "}{" + s.substr(slash + 1) + "}";
}

std::string label_compact(const Label& n) {
  std::string s = "(";
  for (int i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
  return s + ")";
}

}  // namespace

std::string msym_latex(const SymPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : by_weight_desc(to_msym(p))) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first)
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    if (mag != Rational(1)) out += latex_rational(mag) + " ";
    out += "M_{" + label_compact(m) + "}";
    first = false;
  }
  return out;
}

std::string record_text(const EigenRecord& rec) {
  std::ostringstream os;
  os << "model " << to_string(rec.params.model) << "  N=" << rec.params.N << "  lambda=" << rec.params.lambda;
  if (rec.params.mu) os << "  mu=" << *rec.params.mu;
  os << "\n";
  os << "n = " << rec.label.to_string() << "  method " << to_string(rec.method) << "\n";
  os << "E = " << rec.energy << "\n";
  os << "P = " << rec.poly.to_string(variable_name(rec.params.model)) << "\n";
  os << "coefficients:\n";
  for (auto it = rec.coeffs.entries.rbegin(); it != rec.coeffs.entries.rend(); ++it)
    os << "  " << it->first.to_string() << ": " << it->second << "\n";
  return os.str();
}

std::string record_latex(const EigenRecord& rec) {
  std::ostringstream os;
  os << "P_{" << label_compact(rec.label) << "} = " << msym_latex(rec.poly) << ", \\quad E_{"
     << label_compact(rec.label) << "} = " << latex_rational(rec.energy) << "\n";
  return os.str();
}

std::string report_text(const VerifyReport& report) {
  std::ostringstream os;
  os << report.subject << ": " << (report.ok() ? "ok" : "FAILED") << "\n";
  for (const auto& c : report.checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (!c.pass) {
      if (!c.detail.empty()) os << " -- " << c.detail;
      if (c.residual) os << ": " << c.residual->to_string();
    }
    os << "\n";
  }
  for (const auto& r : report.relations) {
    os << "  " << r.left << " vs " << r.right << ": ";
    if (r.equal)
      os << "equal";
    else if (r.proportional)
      os << "proportional, ratio " << *r.ratio;
    else
      os << "not proportional";
    os << "\n";
  }
  for (const auto& n : report.notes) os << "  note: " << n << "\n";
  return os.str();
}

}  // namespace calogero
