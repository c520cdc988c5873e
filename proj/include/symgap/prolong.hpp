#pragma once

// Annihilators of harmonic 2-cochains inside g_0, computed two independent
// ways (exact nullspace of the action, and the kernel-plus-root-spaces closed
// form; any disagreement is a hard error), the Tanaka prolongation of
// (g_-, a_0) by degreewise linear solve, and the resulting symmetry upper
// bounds U_mu (one per regular module) and U (their maximum).

#include "symgap/cochain.hpp"
#include "symgap/kostant.hpp"

#include <map>
#include <vector>

namespace symgap {

// Kernel of x -> x . c on g_0; basis vectors in global coordinates, reduced
// and deterministic.  Throws std::invalid_argument on the zero cochain (its
// annihilator is all of g_0 and callers must not conflate that with a
// computed kernel).
std::vector<AlgebraElement> annihilator(const ParabolicData& pd, const Cochain& c);

// ker(mu) plus the root spaces of g_0 nonpositive against Z_{J_mu}; verified
// against annihilator(pd, phi0) and throws std::logic_error on mismatch.
std::vector<AlgebraElement> annihilator_closed_form(const ParabolicData& pd,
                                                    const HarmonicModule& m);

struct GradedSubalgebra {
  std::map<int, std::vector<AlgebraElement>> basis;  // degree -> reduced basis
  long long total_dim() const;
  std::map<int, long long> dims() const;
};

// a_- = g_-, a_0 as given, a_k = { X in g_k : [X, g_{-1}] subset a_{k-1} }.
// Throws std::invalid_argument unless a0 spans a subalgebra of g_0.
GradedSubalgebra tanaka_prolong(const ParabolicData& pd,
                                const std::vector<AlgebraElement>& a0);

// Cartan element H with mu(H) = 0 and (alpha+beta)(H) != 0 for every alpha in
// Delta+ and beta in Delta+ or beta = 0.  Taken from the moment curve in
// integer generators of ker(mu), where each functional has only finitely many
// roots; throws std::logic_error if some alpha+beta vanishes on all of
// ker(mu), since then no witness exists.
AlgebraElement generic_kernel_element(const ParabolicData& pd, const Weight& mu);

struct ModuleBound {
  HarmonicModule module;
  long long a0_dim = 0;
  std::map<int, long long> prolongation_dims;  // degrees k >= 1
  long long U_mu = 0;                          // total dim of the prolongation
};

struct UpperBounds {
  std::vector<ModuleBound> per_module;  // regular modules, word order
  bool defined = false;                 // false when no module is regular
  long long U = 0;                      // max U_mu; valid when defined
};

UpperBounds upper_bounds(const ParabolicData& pd);

}  // namespace symgap
