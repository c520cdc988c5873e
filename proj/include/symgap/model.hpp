#pragma once

// Curved models (f; g, p): a filtration-adapted subspace f of g carrying the
// deformed bracket [x,y]_f = [x,y] - kappa(x,y).  The canonical model takes
// f = a^{phi0} with kappa = +-phi0; verify_algebraic_model checks the
// filtered-subalgebra axioms and the curvature conditions and reports the
// first counterexample for each failing check.  twistor_descend sends a
// length-2 word at a wide parabolic to the minimal parabolic that carries
// the same module.

#include "symgap/kostant.hpp"
#include "symgap/prolong.hpp"

#include <string>
#include <vector>

namespace symgap {

struct AlgebraicModel {
  const ParabolicData* pd = nullptr;
  // Filtration-adapted basis: each f^i must be spanned by the basis elements
  // of filtration degree >= i.  The canonical builder emits Z-homogeneous
  // elements in ascending degree order, which satisfies this automatically.
  std::vector<AlgebraElement> f_basis;
  Cochain kappa;
  // bracket_table[i][j] = [f_i, f_j]_f for j < i, in ambient coordinates.
  std::vector<std::vector<AlgebraElement>> bracket_table;

  explicit AlgebraicModel(const ParabolicData& p) : pd(&p), kappa(p, 2) {}
};

// [x,y] - kappa(x,y), defined for arbitrary ambient arguments.
AlgebraElement deformed_bracket(const AlgebraicModel& am, const AlgebraElement& x,
                                const AlgebraElement& y);

struct CheckResult {
  bool pass = true;
  std::string witness;  // first counterexample, empty when passing
};

struct ModelReport {
  CheckResult jacobi;    // deformed Jacobi on all basis triples
  CheckResult m1;        // gr(f)_- = g_- and [f^i, f^j]_f inside f^{i+j}
  CheckResult m2;        // [x,y] - [x,y]_f recovers kappa, zero on f^0 slots
  CheckResult m3;        // kappa regular and normal
  CheckResult f0_kappa;  // z . kappa = 0 for every basis element z of f^0
  CheckResult gr_in_a;   // gr(f) inside the prolongation of the annihilator
  bool all_pass() const;
  // Name of the first failing check in the order above; empty when all pass.
  std::string first_failure() const;
};

ModelReport verify_algebraic_model(const AlgebraicModel& am);

// f := a^{phi0}, kappa := sign * phi0, bracket table filled from the deformed
// bracket.  Requires sign in {+1,-1}, a module of positive degree, and
// rank >= 2 excluding A2 (any crossing) and B2/C2 with the long simple root
// crossed: in those cases w(-lambda) can fail to be a negative root and no
// canonical model is defined.  Throws std::invalid_argument on precondition
// violations and std::logic_error if the built model fails verification.
AlgebraicModel build_canonical_model(const ParabolicData& pd, const HarmonicModule& m,
                                     int sign);

// f = g with kappa = 0; the undeformed algebra passes every check.
AlgebraicModel build_flat_model(const ParabolicData& pd);

// Minimal parabolic receiving the module of w: {j} when c(j,k) < 0, {j,k}
// when c(j,k) = 0.  Throws std::invalid_argument if w is not a word for
// (alg, I_q) and std::logic_error if the module has positive degree at the
// source but not at the target (the descent lemma forbids that).
std::vector<int> twistor_descend(const ChevalleyAlgebra& alg, const std::vector<int>& I_q,
                                 const HasseWord2& w);

}  // namespace symgap
