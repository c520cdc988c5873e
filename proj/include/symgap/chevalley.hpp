#pragma once

// Chevalley basis of the simple Lie algebra over a root system: integer
// structure constants N_{a,b} with |N| = p+1, signs fixed by positive choices
// on extraspecial pairs and propagated through the standard closed-sum and
// four-root identities.  The Killing form is computed as the exact trace form
// of the adjoint representation.  The build verifies the Jacobi identity on
// all basis triples and throws on any violation.

#include "symgap/rational.hpp"
#include "symgap/rootsystem.hpp"

#include <cstdint>
#include <vector>

namespace symgap {

struct BasisElement {
  enum class Kind { Cartan, RootVector };
  Kind kind;
  int index;  // Cartan: 1-based node; RootVector: root index

  static BasisElement cartan(int j) { return {Kind::Cartan, j}; }
  static BasisElement root_vector(int idx) { return {Kind::RootVector, idx}; }
};

// Sparse element in the global basis h_1..h_l, e_{root 0}, e_{root 1}, ...
// Terms are kept sorted by basis index with no explicit zeros.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  static AlgebraElement basis(int global_index, Rat coeff = Rat(1));

  bool is_zero() const { return terms_.empty(); }
  const std::vector<std::pair<int, Rat>>& terms() const { return terms_; }
  Rat coeff(int global_index) const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rat& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Rat& c, AlgebraElement a) { return a *= c; }
  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

  void add_term(int global_index, const Rat& c);

 private:
  std::vector<std::pair<int, Rat>> terms_;
};

class ChevalleyAlgebra {
 public:
  explicit ChevalleyAlgebra(const RootSystem& rs);

  const RootSystem& roots() const { return rs_; }
  int rank() const { return rs_.rank(); }
  int dim() const { return rs_.rank() + rs_.num_roots(); }

  // Global basis layout: [0, rank) Cartan h_j, [rank, dim) root vectors.
  int h_index(int j) const { return j - 1; }                 // node j, 1-based
  int e_index(int root_idx) const { return rank() + root_idx; }
  bool is_cartan(int gidx) const { return gidx < rank(); }
  int root_of(int gidx) const { return gidx - rank(); }
  BasisElement basis_element(int gidx) const;

  // N_{a,b} for root indices; 0 when the sum is not a root.
  long long structure_constant(int a, int b) const;
  // Coroot of root(idx) written over h_1..h_l (integers).
  const std::vector<long long>& coroot(int idx) const { return coroot_[idx]; }
  // <root(idx), alpha_j^v>, the eigenvalue of [h_j, e_root].
  long long cartan_eigenvalue(int idx, int j) const { return cartan_eig_[idx][j - 1]; }

  AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;

  Rat killing(const AlgebraElement& x, const AlgebraElement& y) const;
  const Rat& killing_ee(int root_idx) const { return q_[root_idx]; }  // B(e_a, e_{-a})
  Rat killing_hh(int i, int j) const { return killing_h_[i - 1][j - 1]; }

  // e_alpha / B(e_alpha, e_{-alpha}); pairs to 1 against e_{-alpha}.
  AlgebraElement dual_root_vector(int root_idx) const;

  // Split Cartan involution: h -> -h, e_a -> -e_{-a}.
  AlgebraElement theta(const AlgebraElement& x) const;
  // Positive-definite pairing -B(x, theta(y)) on the split form.
  Rat theta_pairing(const AlgebraElement& x, const AlgebraElement& y) const;

  // Weight of an h-eigenvector element; throws if x mixes weights.
  Weight weight_of(const AlgebraElement& x) const;

  // Honest trace of ad(x) ad(y) over the whole basis (no table shortcut).
  Rat trace_form(const AlgebraElement& x, const AlgebraElement& y) const;

  // Exhaustive Jacobi check on basis triples; throws on violation.
  void verify_jacobi() const;

  // "h1", "e(1,2)", "3*h2 - 1/2*e(-1,0)"; "0" for the zero element.
  std::string describe(const AlgebraElement& x) const;

 private:
  using Term = std::pair<int, long long>;
  std::vector<Term> basis_bracket(int gi, int gj) const;

  void build_structure_constants();
  long long get_n(int a, int b) const;  // full-sign lookup via reductions

  const RootSystem& rs_;
  std::vector<std::vector<int>> sum_idx_;        // root index of sum or -1
  std::vector<std::vector<long long>> n_pos_;    // positive-pair table
  std::vector<std::vector<long long>> n_full_;   // all pairs, memoized
  std::vector<std::vector<long long>> coroot_;
  std::vector<std::vector<long long>> cartan_eig_;
  std::vector<Rat> lsq_;                          // (alpha, alpha) per root
  std::vector<Rat> q_;                            // B(e_a, e_{-a})
  std::vector<std::vector<Rat>> killing_h_;
};

}  // namespace symgap
