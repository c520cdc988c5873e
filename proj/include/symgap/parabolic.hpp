#pragma once

// Parabolic subalgebras by crossed nodes.  The grading element Z is the sum
// of the duals Z_i of the crossed simple roots; a root vector e_alpha sits in
// degree Z(alpha), which equals the sum of the alpha-coordinates over the
// crossed nodes.  The build stores the full graded basis, ordered within each
// degree by Cartan node then global root order, so downstream matrices are
// reproducible across runs.

#include "symgap/chevalley.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace symgap {

struct ParabolicData {
  const ChevalleyAlgebra* alg = nullptr;
  std::vector<int> crossed;                      // sorted 1-based node list
  AlgebraElement Z;                              // grading element in the Cartan
  int depth = 0;                                 // nu = Z(highest root)
  std::map<int, std::vector<int>> graded_basis;  // degree -> global basis indices

  bool is_crossed(int j) const;
  // Z(alpha) for a root index: sum of simple-root coordinates at crossed nodes.
  int root_degree(int root_idx) const;
  // Z(x) for a rational weight in simple-root coordinates.
  Rat weight_degree(const Weight& x) const;

  const std::vector<int>& basis_of_degree(int i) const;
  int dim_of_degree(int i) const;

  std::vector<int> p_plus_indices() const;   // degrees > 0
  std::vector<int> g0_indices() const;       // degree 0
  std::vector<int> g_minus_indices() const;  // degrees < 0
};

// Throws std::invalid_argument on an empty node set or an out-of-range node.
ParabolicData build_parabolic(const ChevalleyAlgebra& alg, const std::vector<int>& crossed);

struct DegreeResult {
  bool homogeneous = false;
  int degree = 0;               // valid when homogeneous
  std::vector<int> degrees;     // all degrees present, ascending
};

// Z-degree of a nonzero element; throws std::invalid_argument on zero input.
DegreeResult degree(const ParabolicData& pd, const AlgebraElement& x);

// Projection of x in the filtration piece g^i to its degree-i component.
// Throws std::invalid_argument if x has a component of degree < i.
AlgebraElement leading_part(const ParabolicData& pd, const AlgebraElement& x, int i);

}  // namespace symgap
