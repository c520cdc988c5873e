#pragma once

// Length-2 Hasse words and the harmonic modules they index: the lowest weight
// mu = -w.lambda is computed both by the affine Weyl action and by the closed
// form and the two must agree; the lowest weight vector phi0 is produced as an
// explicit 2-cochain; module dimensions come from the Weyl dimension formula
// on the Levi factor.  Words (j k) act as sigma_j after sigma_k; commuting
// crossed pairs give equal Weyl elements and are enumerated once.

#include "symgap/cochain.hpp"
#include "symgap/parabolic.hpp"

#include <vector>

namespace symgap {

struct HasseWord2 {
  int j = 0;
  int k = 0;
  bool operator==(const HasseWord2& o) const { return j == o.j && k == o.k; }
};

// All length-2 words for the parabolic, ordered lexicographically by (j, k).
std::vector<HasseWord2> hasse_words(const ParabolicData& pd);

struct HarmonicModule {
  HasseWord2 w;
  Weight mu;                 // simple-root coordinates
  std::vector<Rat> mu_fw;    // fundamental-weight coordinates
  int degree = 0;            // Z(mu)
  bool regular = false;      // degree >= 1
  std::vector<int> J_mu;     // uncrossed nodes where mu has nonzero fw coordinate
  long long dim = 0;         // dim of the g_0-irrep with lowest weight mu
  int cov_a = -1;            // root index of alpha_j
  int cov_b = -1;            // root index of sigma_j(alpha_k)
  int val = -1;              // root index of w(-lambda)
};

// Throws std::invalid_argument if w is not a word for pd and std::logic_error
// if the two mu computations disagree (internal consistency trap).
HarmonicModule harmonic_module(const ParabolicData& pd, const HasseWord2& w);

std::vector<HarmonicModule> harmonic_modules(const ParabolicData& pd);

// Weyl dimension formula over the Levi roots (support disjoint from the
// crosses) with the ambient rho; expects -mu dominant there, else throws
// std::logic_error.
long long module_dim(const ParabolicData& pd, const Weight& mu);

// The 2-cochain supported on (e_{-alpha_j}, e_{-sigma_j(alpha_k)}) with value
// e_{w(-lambda)}.
Cochain phi0_lowest_weight_vector(const ParabolicData& pd, const HarmonicModule& m);

}  // namespace symgap
