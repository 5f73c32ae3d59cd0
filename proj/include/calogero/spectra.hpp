// Coefficient solvers for the reduced eigenfunctions: expansions over the
// contour basis f_n (A and B models), over the Hermite-flavoured basis
// f^(H)_n, and over the monomial symmetric functions.
#pragma once

#include "calogero/hamops.hpp"
#include "calogero/rational.hpp"
#include "calogero/sympoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace calogero {

enum class Method { theorem1, theorem2, bmodel, sutherland };

std::string to_string(Method m);
Method parse_method(const std::string& s);
bool method_supports(Method method, Model model);
/// Methods applicable to a model, in canonical order.
std::vector<Method> methods_for(Model model);

/// Expansion coefficients of one eigenfunction, normalized so that
/// entries[target] = 1. Zero coefficients are not stored.
struct CoeffTable {
  Label target;
  std::map<Label, Rational> entries;
  Method method = Method::theorem1;

  [[nodiscard]] Rational at(const Label& m) const;
};

/// One elementary step of a triangular recursion. For theorem1 the shift is
/// (1-nu)e_j + (1+nu)e_k, for the B model (1-nu)e_j + nu e_k, for theorem2
/// (1+2t-nu)e_j + (1+2u+nu)e_k. Diagonal steps (j == k) have nu = 0.
struct StepDescriptor {
  int j = 0;
  int k = 0;
  int nu = 0;
  int t = 0;
  int u = 0;
};

/// The shift vector a step subtracts from its source label.
Label step_shift(Method method, const StepDescriptor& step, int nparts);

/// Coefficients over f_m, solved top-down by weight:
/// 2(|n|-|m|) alpha(m) = sum_{j<=k} sum_nu g_jk(nu; m) alpha(m + E^nu_jk).
CoeffTable alpha_table(const Label& n, const ModelParams& params);

/// Coefficients over f^(H)_m:
/// (E_n - E_m) beta(m) = sum_{j<k} sum_{nu,t,u} g^{tu}_jk(nu; m) beta(m + E^{tu,nu}_jk).
CoeffTable beta_table(const Label& n, const ModelParams& params);

/// The B-model analogue of alpha_table, with 4(|n|-|m|) on the left.
CoeffTable alphaB_table(const Label& n, const ModelParams& params);

enum class SutherlandMode { recursion, explicit_series };

/// Coefficients over M_m for a partition n, from the monomial action rows.
CoeffTable sutherland_table(const Label& n, const ModelParams& params,
                            SutherlandMode mode = SutherlandMode::recursion);

/// The closed multi-step series for alpha (model A), summed over ordered
/// step chains from n with weight prod_r g(nu_r; c_r) / (4^s s!). Slow.
std::map<Label, Rational> alpha_series(const Label& n, const ModelParams& params);

/// The unit of output: one eigenfunction with its energy and expansion.
struct EigenRecord {
  ModelParams params;
  Label label;
  Method method = Method::theorem1;
  Rational energy;
  CoeffTable coeffs;
  SymPoly poly;
};

/// Sum of table coefficients against the method's basis.
SymPoly assemble(const CoeffTable& table, const ModelParams& params);

/// Throws std::invalid_argument on a method/model mismatch, a label of the
/// wrong length, or a non-partition label for the sutherland method.
EigenRecord solve(const Label& n, const ModelParams& params, Method method);

}  // namespace calogero
