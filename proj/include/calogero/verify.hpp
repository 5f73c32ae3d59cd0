// Exact verification of computed eigenfunctions and of the classical
// identities they reduce to.
#pragma once

#include "calogero/exact.hpp"
#include "calogero/hamops.hpp"
#include "calogero/spectra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace calogero {

/// One named check. A failing check carries a witness: the exact residual
/// polynomial when there is one, and a short description otherwise.
struct Check {
  std::string name;
  bool pass = true;
  std::optional<SymPoly> residual;
  std::string detail;
};

/// Observed relation between two polynomials: left == ratio * right.
struct Relation {
  std::string left;
  std::string right;
  bool equal = false;
  bool proportional = false;
  std::optional<Rational> ratio;
};

struct VerifyReport {
  std::string subject;
  std::vector<Check> checks;
  std::vector<Relation> relations;
  std::vector<std::string> notes;

  [[nodiscard]] bool ok() const;
  void add(Check c);
  void merge(const VerifyReport& other);
};

/// a == r * b for some nonzero rational r, decided by cross-multiplying the
/// coefficients of the leading M-term (weight, then lexicographic).
/// Returns r, or nothing when the polynomials are not proportional.
std::optional<Rational> proportionality(const SymPoly& a, const SymPoly& b);

/// Residual H(poly) - (E_n - E_0) poly must vanish, and the recorded energy
/// must match the energy formula.
VerifyReport verify_eigen(const EigenRecord& rec);

/// N = 1 only. Model A: P_n proportional to H_n. Model B: P_n proportional
/// to L_n^{(mu - 1/2)} in z. For integer lambda = m + 1 >= 3 also the
/// derivative identities relating degree n to degree n + m.
VerifyReport verify_reductions(const ModelParams& params, int max_n);

/// Schur polynomial of a partition as the ratio of alternants.
SymPoly schur_polynomial(const Label& n);

/// f_n at lambda = 1 against +-s_n for every partition of weight up to
/// max_weight. The sign of each label is recorded in the notes.
VerifyReport verify_schur(int N, int max_weight);

/// All applicable methods on one label, each eigen-checked, with the pairwise
/// equality and proportionality relations. For model A partitions it also
/// notes whether P_n lies in the span of the same-energy monomial-basis
/// eigenfunctions.
VerifyReport cross_check(const Label& n, const ModelParams& params);

/// Solves both labels with the first method of the model and reports the
/// observed relation between the two eigenfunctions and between the two
/// basis functions f.
VerifyReport relation_probe(const Label& a, const Label& b, const ModelParams& params);

}  // namespace calogero
