#include "symgap/hodge.hpp"

#include "symgap/linalg.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_map>

namespace symgap {

namespace {

// Weight coordinates of basis cochains are small integers; one signed byte
// per node packs any weight seen here into a single key.
std::uint64_t pack_weight(const std::vector<int>& w) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    out |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(w[i] + 128)) << (8 * i);
  return out;
}

// Basis cochain: ascending key of negative root indices plus a value index.
struct Elt {
  std::array<int, 3> key{};
  int g = 0;
};

std::uint64_t pack_elt(const Elt& e, int arity) {
  std::uint64_t out = static_cast<std::uint64_t>(e.g) << 36;
  for (int i = 0; i < arity; ++i)
    out |= static_cast<std::uint64_t>(e.key[i] + 1) << (12 * i);
  return out;
}

struct Block {
  std::vector<Elt> c1, c2, c3;
  std::unordered_map<std::uint64_t, int> row1, row2, row3;
};

}  // namespace

HodgeOracleResult hodge_oracle(const ParabolicData& pd, long long cap) {
  const ChevalleyAlgebra& g = *pd.alg;
  const RootSystem& rs = g.roots();
  const int rank = rs.rank();
  const int dim = g.dim();

  std::vector<int> negroots;  // root indices of the g_- basis
  for (int gi : pd.g_minus_indices()) negroots.push_back(gi - rank);
  std::sort(negroots.begin(), negroots.end());
  const long long n = static_cast<long long>(negroots.size());

  HodgeOracleResult res;
  res.dim_c2 = n * (n - 1) / 2 * dim;
  if (res.dim_c2 > cap) {
    res.skipped = true;
    res.skip_reason = "dim C^2 = " + std::to_string(res.dim_c2) +
                      " exceeds cap " + std::to_string(cap);
    return res;
  }

  // Integer weight coordinates for every global basis index and every root.
  std::vector<std::vector<int>> gw(dim, std::vector<int>(rank, 0));
  for (int idx = 0; idx < rs.num_roots(); ++idx)
    for (int i = 0; i < rank; ++i) gw[rank + idx][i] = rs.root(idx)[i];

  std::unordered_map<std::uint64_t, Block> blocks;
  std::vector<int> wbuf(rank);

  auto weight_key = [&](const Elt& e, int arity) {
    for (int i = 0; i < rank; ++i) wbuf[i] = gw[e.g][i];
    for (int a = 0; a < arity; ++a)
      for (int i = 0; i < rank; ++i) wbuf[i] -= rs.root(e.key[a])[i];
    return pack_weight(wbuf);
  };

  // C^2 defines the block set; C^1 and C^3 contribute only on those weights.
  for (std::size_t a = 0; a < negroots.size(); ++a)
    for (std::size_t b = a + 1; b < negroots.size(); ++b)
      for (int v = 0; v < dim; ++v) {
        Elt e{{negroots[a], negroots[b], 0}, v};
        Block& blk = blocks[weight_key(e, 2)];
        blk.row2.emplace(pack_elt(e, 2), static_cast<int>(blk.c2.size()));
        blk.c2.push_back(e);
      }
  for (int r : negroots)
    for (int v = 0; v < dim; ++v) {
      Elt e{{r, 0, 0}, v};
      auto it = blocks.find(weight_key(e, 1));
      if (it == blocks.end()) continue;
      it->second.row1.emplace(pack_elt(e, 1), static_cast<int>(it->second.c1.size()));
      it->second.c1.push_back(e);
    }
  for (std::size_t a = 0; a < negroots.size(); ++a)
    for (std::size_t b = a + 1; b < negroots.size(); ++b)
      for (std::size_t c = b + 1; c < negroots.size(); ++c)
        for (int v = 0; v < dim; ++v) {
          Elt e{{negroots[a], negroots[b], negroots[c]}, v};
          auto it = blocks.find(weight_key(e, 3));
          if (it == blocks.end()) continue;
          it->second.row3.emplace(pack_elt(e, 3), static_cast<int>(it->second.c3.size()));
          it->second.c3.push_back(e);
        }

  auto expand = [&](const Cochain& c, const std::unordered_map<std::uint64_t, int>& rows,
                    int arity, QMatrix& m, std::size_t col) {
    for (const auto& [key, val] : c.entries())
      for (const auto& [gi, coef] : val.terms()) {
        Elt e;
        for (int i = 0; i < arity; ++i) e.key[i] = key[i];
        e.g = gi;
        m.at(static_cast<std::size_t>(rows.at(pack_elt(e, arity))), col) += coef;
      }
  };

  res.kernel_match = true;
  for (auto& [wk, blk] : blocks) {
    (void)wk;
    const std::size_t d1 = blk.c1.size(), d2 = blk.c2.size(), d3 = blk.c3.size();
    QMatrix M1(d2, d1), M2(d3, d2), N2(d1, d2), N3(d2, d3);
    for (std::size_t j = 0; j < d1; ++j) {
      Cochain c(pd, 1);
      c.add({blk.c1[j].key[0]}, AlgebraElement::basis(blk.c1[j].g));
      expand(del(c), blk.row2, 2, M1, j);
    }
    for (std::size_t j = 0; j < d2; ++j) {
      Cochain c(pd, 2);
      c.add({blk.c2[j].key[0], blk.c2[j].key[1]}, AlgebraElement::basis(blk.c2[j].g));
      expand(del(c), blk.row3, 3, M2, j);
      expand(delstar(c), blk.row1, 1, N2, j);
    }
    for (std::size_t j = 0; j < d3; ++j) {
      Cochain c(pd, 3);
      c.add({blk.c3[j].key[0], blk.c3[j].key[1], blk.c3[j].key[2]},
            AlgebraElement::basis(blk.c3[j].g));
      expand(delstar(c), blk.row2, 2, N3, j);
    }

    QMatrix boxm = multiply(M1, N2);
    {
      QMatrix t = multiply(N3, M2);
      for (std::size_t i = 0; i < d2; ++i)
        for (std::size_t j = 0; j < d2; ++j) boxm.at(i, j) += t.at(i, j);
    }
    // Stack del and delstar to get ker del cap ker delstar directly.
    QMatrix both(d3 + d1, d2);
    for (std::size_t i = 0; i < d3; ++i)
      for (std::size_t j = 0; j < d2; ++j) both.at(i, j) = M2.at(i, j);
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d2; ++j) both.at(d3 + i, j) = N2.at(i, j);

    const long long r1 = static_cast<long long>(M1.rank());
    const long long r2 = static_cast<long long>(M2.rank());
    const long long r3 = static_cast<long long>(N3.rank());
    const long long kbox = static_cast<long long>(d2) - static_cast<long long>(boxm.rank());
    const long long kboth = static_cast<long long>(d2) - static_cast<long long>(both.rank());

    res.dim_im_del += r1;
    res.dim_im_delstar += r3;
    res.dim_ker_box += kbox;
    res.dim_h2 += (static_cast<long long>(d2) - r2) - r1;
    if (kbox != kboth) res.kernel_match = false;
  }
  return res;
}

}  // namespace symgap
