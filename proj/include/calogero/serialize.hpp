// JSON, plain-text and LaTeX renderings of polynomials, records and
// verification reports. JSON output is canonical: keys in fixed order,
// terms in a fixed order, rationals as "p/q" strings.
#pragma once

#include "calogero/hamops.hpp"
#include "calogero/spectra.hpp"
#include "calogero/verify.hpp"

#include <json.hpp>

#include <string>

namespace calogero {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json label_json(const Label& n);
Label label_from_json(const Json& j);

/// {"basis":"msym","terms":[{"partition":[...],"coeff":"p/q"}]} for a
/// symmetric polynomial, partitions in decreasing lexicographic order.
/// Anything else is written as {"basis":"monomial","nvars":N,"terms":[{"exponent":[...],"coeff":"p/q"}]}.
Json poly_json(const SymPoly& p);
SymPoly poly_from_json(const Json& j, int nvars);

Json action_row_json(const ActionRow& row);
Json record_json(const EigenRecord& rec);
/// Throws std::runtime_error (or a nlohmann exception) on malformed input.
EigenRecord record_from_json(const Json& j);
Json report_json(const VerifyReport& report);

std::string record_text(const EigenRecord& rec);
std::string record_latex(const EigenRecord& rec);
std::string report_text(const VerifyReport& report);

/// M-basis rendering with terms sorted by decreasing (weight, lex), e.g.
/// "\frac{3}{16} M_{(2)} - \frac{3}{16} M_{(0)}".
std::string msym_latex(const SymPoly& p);

/// Variable name used for the model: x for A, z for B.
std::string variable_name(Model model);

}  // namespace calogero
