#pragma once

// Cochains C^k(g_-, g) for k <= 3, identified with Lambda^k p_+ (x) g through
// the Killing form with dual_root_vector normalization.  Keys are ascending
// tuples of negative-degree root indices; the stored value is the evaluation
// on the corresponding root vectors.  del is the Chevalley-Eilenberg
// cohomology differential; delstar is the homology differential on
// Lambda p_+ (x) g transported through the identification, with signs chosen
// so that (delstar)^2 = 0 and adjointness against del holds exactly for the
// q-weighted theta pairing (a tested property, not an assumption).

#include "symgap/parabolic.hpp"

#include <map>
#include <vector>

namespace symgap {

class Cochain {
 public:
  Cochain(const ParabolicData& pd, int arity);

  int arity() const { return arity_; }
  const ParabolicData& parabolic() const { return *pd_; }
  bool is_zero() const { return data_.empty(); }
  const std::map<std::vector<int>, AlgebraElement>& entries() const { return data_; }

  // Key entries may arrive unsorted; the signed sort is applied and duplicate
  // entries kill the contribution.  Entries must be negative-degree roots.
  void add(const std::vector<int>& key, const AlgebraElement& v);
  // Signed lookup by (possibly unsorted) key.
  AlgebraElement value(const std::vector<int>& key) const;

  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  Cochain& operator*=(const Rat& c);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  bool operator==(const Cochain& o) const;

  // h-weight of a weight-homogeneous cochain; throws on zero or mixed input.
  Weight weight() const;

 private:
  void check_key(const std::vector<int>& key) const;

  const ParabolicData* pd_;
  int arity_;
  std::map<std::vector<int>, AlgebraElement> data_;
};

// Cohomology differential, arity 0..2 -> arity+1.
Cochain del(const Cochain& c);
// Homology differential under the chain identification, arity 1..3 -> arity-1.
Cochain delstar(const Cochain& c);
// Algebraic Laplacian del delstar + delstar del on 2-cochains.
Cochain box(const Cochain& c);

// Positive-definite pairing: sum over keys of (prod 1/q) theta_pairing(values).
Rat cochain_pairing(const Cochain& a, const Cochain& b);

// Natural action of z on a cochain: bracket the value, subtract insertions of
// [z, slot] with brackets projected back to g_- (exact for z in g_0).
Cochain cochain_action(const AlgebraElement& z, const Cochain& c);

// Bilinear evaluation of a 2-cochain; arguments are projected to g_-.
AlgebraElement evaluate2(const Cochain& c, const AlgebraElement& x, const AlgebraElement& y);

// Split into Z-homogeneous components; the components sum back to the input.
std::map<int, Cochain> degree_split(const Cochain& c);

struct RegularityNormality {
  bool regular = false;
  bool normal = false;
  std::vector<int> degrees;  // degrees of the nonzero homogeneous components
};

// regular: every homogeneous component has degree >= 1; normal: delstar c = 0.
RegularityNormality regularity_normality(const Cochain& c);

}  // namespace symgap
