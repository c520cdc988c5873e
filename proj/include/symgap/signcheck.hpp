#pragma once

// Split-real +-phi0 equivalence: decide whether some group element over a
// chosen character lattice sends phi0 to -phi0.  Candidates are diagonal
// sign matrices of the split torus (the character value on a sign vector is
// prod eps_i^{x_i} with x the lattice coordinates of the lowest weight) and
// Weyl representatives n_i = exp(e_i) exp(-f_i) exp(e_i) for uncrossed nodes
// fixing the weight, acting on the cochain by exact exponentials.  A negative
// verdict means -phi0 is not reachable by these witnesses; completeness over
// the full G_0-orbit is not claimed.

#include "symgap/kostant.hpp"

#include <string>
#include <vector>

namespace symgap {

enum class WeightLatticeSpec {
  simply_connected,  // characters = weight lattice; coordinates are fw coords
  adjoint,           // characters = root lattice; coordinates are simple coords
  matrix_sl,         // A_l as SL(l+1): eps coords, sign vectors of det +1
  matrix_pgl,        // A_l as PGL(l+1): eps coords, sign vectors mod global flip
  matrix_so_split,   // B_l/D_l as split SO: eps coords, free sign vectors
};

// Parses "sc", "adjoint", "sl", "pgl", "so-split"; throws on anything else.
WeightLatticeSpec parse_lattice(const std::string& name);
std::string lattice_str(WeightLatticeSpec spec);

// Integer exponents of the torus character acting on the module's lowest
// weight vector, in the coordinate basis of the lattice.  Throws
// std::invalid_argument when the lattice does not apply to the family
// (matrix-SL/PGL need type A, matrix-so-split needs type B or D).
std::vector<long long> torus_character_exponents(const ParabolicData& pd,
                                                 const HarmonicModule& m,
                                                 WeightLatticeSpec spec);

struct SignCheckResult {
  bool equivalent = false;
  // Torus witness: one +-1 per lattice coordinate; empty when none is used.
  std::vector<int> torus_signs;
  // Node of the Weyl representative supplying the sign; 0 when unused.
  int weyl_node = 0;
  std::string witness;  // printable witness, or the non-reachability label
};

// Requires a regular module (throws std::invalid_argument otherwise).  The
// torus witness is canonical: fewest -1 entries, earliest positions on ties.
SignCheckResult split_real_sign_check(const ParabolicData& pd, const HarmonicModule& m,
                                      WeightLatticeSpec spec);

}  // namespace symgap
