#pragma once

// Root systems of the simple Lie types in LiE node numbering.  Roots are
// integer vectors in simple-root coordinates; weights are rational vectors in
// the same basis with explicit conversions to fundamental-weight coordinates.
// Positive roots are enumerated by closing the simple roots under root
// strings and are ordered by height, then lexicographically; this order fixes
// basis and key orders everywhere downstream.

#include "symgap/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symgap {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Family family;
  int rank;

  // Accepts case-insensitive names like "G2", "e8", "A5".
  static SimpleType parse(const std::string& name);
  std::string str() const;
};

using Root = std::vector<int>;     // integer simple-root coordinates
using Weight = std::vector<Rat>;   // rational simple-root coordinates

Weight to_weight(const Root& r);

class RootSystem {
 public:
  explicit RootSystem(SimpleType t);

  SimpleType type() const { return type_; }
  int rank() const { return rank_; }

  // Cartan matrix, 0-based storage; c(j,k) is the 1-based entry c_{jk}.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  int c(int j, int k) const { return cartan_[j - 1][k - 1]; }

  // Root indexing: [0, num_pos()) positive by (height, lex); negatives are
  // mirrored to [num_pos(), 2*num_pos()) in the same order.
  int num_pos() const { return static_cast<int>(pos_.size()); }
  int num_roots() const { return 2 * num_pos(); }
  bool is_positive(int idx) const { return idx < num_pos(); }
  int neg(int idx) const { return idx < num_pos() ? idx + num_pos() : idx - num_pos(); }
  const Root& root(int idx) const;
  std::optional<int> root_index(const Root& r) const;
  int simple_root_index(int j) const;  // 1-based node -> root index
  int height(int idx) const;

  const Root& highest_root() const { return pos_.back(); }

  // Coordinate conversions.  fw_j(x) = sum_i x_i c_{ij}.
  std::vector<Rat> to_fw(const Weight& x) const;
  Weight from_fw(const std::vector<Rat>& fw) const;

  // Invariant symmetric form with long roots normalized to length 2.
  Rat sym(const Weight& x, const Weight& y) const;
  Rat length_sq(int idx) const;
  // <x, alpha^v> = 2 (x, alpha) / (alpha, alpha) for the root with this index.
  Rat pair_coroot(const Weight& x, int idx) const;

  Weight rho() const;  // sum of fundamental weights

  // sigma_j(x) = x - <x, alpha_j^v> alpha_j, node j 1-based.
  Weight simple_reflection(int j, const Weight& x) const;
  // Word acts as a composition: {j, k} means sigma_j after sigma_k.
  Weight weyl_apply(const std::vector<int>& word, const Weight& x) const;
  // Affine action w.x = w(x + rho) - rho.
  Weight affine_action(const std::vector<int>& word, const Weight& x) const;

  // Largest p >= 0 with beta - p*alpha a root (alpha, beta root indices).
  int string_p(int alpha, int beta) const;

 private:
  SimpleType type_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Rat> d_;                  // d_i = (alpha_i, alpha_i) / 2
  std::vector<Root> pos_;
  std::vector<Root> roots_;             // positives then negatives, same order
  std::map<Root, int> index_;           // positive roots only
  std::vector<std::vector<Rat>> fw_to_simple_;  // inverse of transposed Cartan
};

}  // namespace symgap
