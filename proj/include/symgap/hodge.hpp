#pragma once

// Brute-force Hodge decomposition of the degree-2 cochain space: dense exact
// linear algebra per h-weight block (del, delstar, and box all preserve
// weights, so C^2 splits into independent blocks).  For each block the ranks
// of del: C^1 -> C^2 and delstar: C^3 -> C^2 and the kernel of box are
// computed; the harmonic dimension is recomputed two more ways (cohomology
// ker/im, and ker del intersect ker delstar) so the result certifies itself.
// Oversized spaces are reported as skipped, never approximated.

#include "symgap/cochain.hpp"

#include <string>

namespace symgap {

struct HodgeOracleResult {
  bool skipped = false;
  std::string skip_reason;
  long long dim_c2 = 0;
  long long dim_im_del = 0;       // rank of del: C^1 -> C^2
  long long dim_ker_box = 0;      // harmonic 2-cochains
  long long dim_im_delstar = 0;   // rank of delstar: C^3 -> C^2
  long long dim_h2 = 0;           // dim ker(del|C^2) - dim im(del|C^1)
  bool kernel_match = false;      // ker box == ker del cap ker delstar, blockwise
};

// Default cap bounds dim C^2 = C(|g_-|, 2) * dim g.
HodgeOracleResult hodge_oracle(const ParabolicData& pd, long long cap = 200000);

}  // namespace symgap
