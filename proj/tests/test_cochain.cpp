#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symgap/cochain.hpp"
#include "symgap/linalg.hpp"

#include <memory>
#include <random>

using namespace symgap;

namespace {

struct Ctx {
  std::unique_ptr<RootSystem> rs;
  std::unique_ptr<ChevalleyAlgebra> alg;
  ParabolicData pd;
  Ctx(const std::string& name, std::vector<int> crossed) {
    rs = std::make_unique<RootSystem>(SimpleType::parse(name));
    alg = std::make_unique<ChevalleyAlgebra>(*rs);
    pd = build_parabolic(*alg, crossed);
  }
};

std::vector<int> gm_roots(const ParabolicData& pd) {
  std::vector<int> out;
  for (int gidx : pd.g_minus_indices()) out.push_back(pd.alg->root_of(gidx));
  std::sort(out.begin(), out.end());
  return out;
}

Cochain rand_cochain(const ParabolicData& pd, int arity, std::mt19937& rng, int nterms = 3) {
  const auto& g = *pd.alg;
  const auto gm = gm_roots(pd);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(gm.size()) - 1);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3), bpick(0, g.dim() - 1);
  Cochain c(pd, arity);
  for (int t = 0; t < nterms; ++t) {
    std::vector<int> key;
    for (int i = 0; i < arity; ++i) key.push_back(gm[pick(rng)]);
    c.add(key, AlgebraElement::basis(bpick(rng), Rat(num(rng)) / den(rng)));
  }
  return c;
}

// The contact-grading lowest weight vector on G2 crossed at node 2:
// keys (-alpha_2, -alpha_1-alpha_2), value e_{-3 alpha_1 - alpha_2}.
Cochain g2_phi0(const Ctx& c) {
  const auto& rs = *c.rs;
  const auto& g = *c.alg;
  Cochain phi(c.pd, 2);
  const int k1 = rs.neg(rs.simple_root_index(2));
  const int k2 = rs.neg(*rs.root_index({1, 1}));
  phi.add({k1, k2}, AlgebraElement::basis(g.e_index(rs.neg(*rs.root_index({3, 1})))));
  return phi;
}

}  // namespace

TEST_CASE("arity guards") {
  Ctx c("A2", {1, 2});
  CHECK_THROWS_AS(Cochain(c.pd, 4), std::invalid_argument);
  CHECK_THROWS_AS(del(Cochain(c.pd, 3)), std::invalid_argument);
  CHECK_THROWS_AS(delstar(Cochain(c.pd, 0)), std::invalid_argument);
  CHECK_THROWS_AS(box(Cochain(c.pd, 1)), std::invalid_argument);
  // Keys must be negative-degree roots.
  Cochain bad(c.pd, 1);
  CHECK_THROWS_AS(bad.add({c.rs->simple_root_index(1)}, AlgebraElement::basis(0)),
                  std::invalid_argument);
}

TEST_CASE("key canonicalization carries the permutation sign") {
  Ctx c("A2", {1, 2});
  const auto gm = gm_roots(c.pd);
  const AlgebraElement v = AlgebraElement::basis(0, Rat(5, 2));
  Cochain a(c.pd, 2);
  a.add({gm[0], gm[1]}, v);
  Cochain b(c.pd, 2);
  AlgebraElement negv = v;
  negv *= Rat(-1);
  b.add({gm[1], gm[0]}, negv);
  CHECK(a == b);
  CHECK(a.value({gm[1], gm[0]}) == negv);
  Cochain z(c.pd, 2);
  z.add({gm[0], gm[0]}, v);
  CHECK(z.is_zero());
}

TEST_CASE("differential on 0-cochains is the g_- action") {
  Ctx c("A3", {1});
  const auto& rs = *c.rs;
  const auto& g = *c.alg;
  const auto gm = gm_roots(c.pd);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int x = static_cast<int>(rng() % g.dim());
    const Cochain dx = del([&] {
      Cochain c0(c.pd, 0);
      c0.add({}, AlgebraElement::basis(x));
      return c0;
    }());
    for (int u : gm)
      CHECK(dx.value({u}) ==
            g.bracket(AlgebraElement::basis(g.e_index(u)), AlgebraElement::basis(x)));
  }

  // ker(del | C^0) is exactly the centralizer of g_- in g.  The lowest root
  // vector always centralizes g_-, so the kernel is never zero.
  Cochain low(c.pd, 0);
  low.add({}, AlgebraElement::basis(g.e_index(rs.neg(rs.num_pos() - 1))));
  CHECK(del(low).is_zero());

  // Centralizer system: for each u in g_-, each output coordinate of [e_u, x].
  std::vector<std::vector<Rat>> rows;
  for (int u : gm) {
    std::vector<AlgebraElement> cols;
    for (int x = 0; x < g.dim(); ++x)
      cols.push_back(g.bracket(AlgebraElement::basis(g.e_index(u)), AlgebraElement::basis(x)));
    for (int out = 0; out < g.dim(); ++out) {
      std::vector<Rat> row(g.dim(), Rat(0));
      bool nonzero = false;
      for (int x = 0; x < g.dim(); ++x) {
        row[x] = cols[x].coeff(out);
        if (row[x] != 0) nonzero = true;
      }
      if (nonzero) rows.push_back(row);
    }
  }
  QMatrix m(static_cast<int>(rows.size()), g.dim());
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    for (int x = 0; x < g.dim(); ++x) m.at(r, x) = rows[r][x];
  const int centralizer_dim = g.dim() - m.rank();
  int del_kernel_dim = 0;
  {
    // Rank of del on C^0 via its matrix in the cochain basis.
    std::map<std::pair<std::vector<int>, int>, int> coord;
    std::vector<std::vector<Rat>> dcols(g.dim());
    for (int x = 0; x < g.dim(); ++x) {
      Cochain c0(c.pd, 0);
      c0.add({}, AlgebraElement::basis(x));
      const Cochain dx = del(c0);
      for (const auto& [key, v] : dx.entries())
        for (const auto& [gidx, coeff] : v.terms()) {
          const auto ins = coord.emplace(std::make_pair(key, gidx),
                                         static_cast<int>(coord.size()));
          const int r = ins.first->second;
          if (static_cast<int>(dcols[x].size()) <= r) dcols[x].resize(r + 1, Rat(0));
          dcols[x][r] = coeff;
        }
    }
    QMatrix dm(static_cast<int>(coord.size()), g.dim());
    for (int x = 0; x < g.dim(); ++x)
      for (int r = 0; r < static_cast<int>(dcols[x].size()); ++r) dm.at(r, x) = dcols[x][r];
    del_kernel_dim = g.dim() - dm.rank();
  }
  CHECK(del_kernel_dim == centralizer_dim);
  CHECK(del_kernel_dim > 0);
}

TEST_CASE("del squares to zero") {
  std::mt19937 rng(11);
  Ctx a3("A3", {1});
  for (int trial = 0; trial < 500; ++trial)
    CHECK(del(del(rand_cochain(a3.pd, 1, rng))).is_zero());
  for (const auto& [name, crossed] :
       std::vector<std::pair<std::string, std::vector<int>>>{
           {"A2", {1, 2}}, {"B2", {1}}, {"G2", {2}}, {"C3", {1, 3}}}) {
    Ctx c(name, crossed);
    for (int trial = 0; trial < 40; ++trial) {
      CHECK(del(del(rand_cochain(c.pd, 0, rng))).is_zero());
      CHECK(del(del(rand_cochain(c.pd, 1, rng))).is_zero());
    }
  }
}

TEST_CASE("delstar squares to zero") {
  std::mt19937 rng(13);
  for (const auto& [name, crossed] :
       std::vector<std::pair<std::string, std::vector<int>>>{
           {"A3", {1}}, {"A2", {1, 2}}, {"B2", {2}}, {"G2", {2}}, {"C3", {1, 3}}}) {
    Ctx c(name, crossed);
    for (int trial = 0; trial < 40; ++trial) {
      CHECK(delstar(delstar(rand_cochain(c.pd, 2, rng))).is_zero());
      CHECK(delstar(delstar(rand_cochain(c.pd, 3, rng))).is_zero());
    }
  }
}

TEST_CASE("del and delstar are adjoint for the q-weighted theta pairing") {
  std::mt19937 rng(17);
  Ctx a3("A3", {1});
  for (int trial = 0; trial < 500; ++trial) {
    const Cochain a = rand_cochain(a3.pd, 1, rng);
    const Cochain b = rand_cochain(a3.pd, 2, rng);
    CHECK(cochain_pairing(del(a), b) == cochain_pairing(a, delstar(b)));
  }
  for (const auto& [name, crossed] :
       std::vector<std::pair<std::string, std::vector<int>>>{
           {"A2", {1, 2}}, {"G2", {1}}, {"G2", {2}}, {"B3", {2}}}) {
    Ctx c(name, crossed);
    for (int trial = 0; trial < 25; ++trial) {
      for (int k = 0; k <= 2; ++k) {
        const Cochain a = rand_cochain(c.pd, k, rng);
        const Cochain b = rand_cochain(c.pd, k + 1, rng);
        CHECK(cochain_pairing(del(a), b) == cochain_pairing(a, delstar(b)));
      }
    }
  }
}

TEST_CASE("pairing is symmetric and positive definite") {
  std::mt19937 rng(19);
  Ctx c("B2", {1});
  for (int trial = 0; trial < 60; ++trial) {
    const Cochain a = rand_cochain(c.pd, 2, rng);
    const Cochain b = rand_cochain(c.pd, 2, rng);
    CHECK(cochain_pairing(a, b) == cochain_pairing(b, a));
    if (!a.is_zero()) CHECK(cochain_pairing(a, a) > 0);
  }
}

TEST_CASE("contact-grading lowest weight vector is harmonic") {
  Ctx c("G2", {2});
  const Cochain phi = g2_phi0(c);
  CHECK(phi.weight() == Weight{Rat(-2), Rat(1)});
  CHECK(del(phi).is_zero());
  CHECK(delstar(phi).is_zero());
  CHECK(box(phi).is_zero());
  const auto rn = regularity_normality(phi);
  CHECK(rn.regular);
  CHECK(rn.normal);
  CHECK(rn.degrees == std::vector<int>{1});
}

TEST_CASE("Laplacian is not identically zero on exact cochains") {
  Ctx c("A2", {1, 2});
  std::mt19937 rng(23);
  bool found_nonzero = false;
  for (int trial = 0; trial < 10 && !found_nonzero; ++trial) {
    const Cochain eta = rand_cochain(c.pd, 3, rng);
    const Cochain b = delstar(eta);
    if (b.is_zero()) continue;
    found_nonzero = !box(b).is_zero();
  }
  CHECK(found_nonzero);
  Cochain zero2(c.pd, 2);
  CHECK(box(zero2).is_zero());
}

TEST_CASE("Cartan action is by the cochain weight") {
  Ctx c("G2", {2});
  const auto& rs = *c.rs;
  const auto& g = *c.alg;
  const Cochain phi = g2_phi0(c);
  const Weight mu = phi.weight();
  for (int j = 1; j <= rs.rank(); ++j) {
    Cochain scaled = phi;
    scaled *= rs.pair_coroot(mu, rs.simple_root_index(j));
    CHECK(cochain_action(AlgebraElement::basis(g.h_index(j)), phi) == scaled);
  }
}

TEST_CASE("Laplacian commutes with the g_0 action") {
  std::mt19937 rng(29);
  for (const auto& [name, crossed] :
       std::vector<std::pair<std::string, std::vector<int>>>{{"A3", {1}}, {"G2", {2}}}) {
    Ctx c(name, crossed);
    const auto& g = *c.alg;
    std::vector<int> g0 = c.pd.g0_indices();
    for (int trial = 0; trial < 12; ++trial) {
      const Cochain x = rand_cochain(c.pd, 2, rng);
      const AlgebraElement z = AlgebraElement::basis(g0[rng() % g0.size()]);
      CHECK(cochain_action(z, box(x)) == box(cochain_action(z, x)));
    }
  }
}

TEST_CASE("differentials preserve the h-weight") {
  std::mt19937 rng(31);
  Ctx c("B3", {1});
  const auto gm = gm_roots(c.pd);
  for (int trial = 0; trial < 60; ++trial) {
    // One key, one value term: always weight homogeneous.
    Cochain x(c.pd, 2);
    std::vector<int> key = {gm[rng() % gm.size()], gm[rng() % gm.size()]};
    x.add(key, AlgebraElement::basis(static_cast<int>(rng() % c.alg->dim())));
    if (x.is_zero()) continue;
    const Weight w = x.weight();
    const Cochain dx = del(x);
    const Cochain sx = delstar(x);
    if (!dx.is_zero()) CHECK(dx.weight() == w);
    if (!sx.is_zero()) CHECK(sx.weight() == w);
  }
}

TEST_CASE("evaluation of 2-cochains projects arguments to g_-") {
  Ctx c("G2", {2});
  const auto& rs = *c.rs;
  const auto& g = *c.alg;
  const Cochain phi = g2_phi0(c);
  const int u = rs.neg(rs.simple_root_index(2));
  const int v = rs.neg(*rs.root_index({1, 1}));
  const AlgebraElement eu = AlgebraElement::basis(g.e_index(u));
  const AlgebraElement ev = AlgebraElement::basis(g.e_index(v));
  const AlgebraElement val = AlgebraElement::basis(g.e_index(rs.neg(*rs.root_index({3, 1}))));

  CHECK(evaluate2(phi, eu, ev) == val);
  AlgebraElement negval = val;
  negval *= Rat(-1);
  CHECK(evaluate2(phi, ev, eu) == negval);
  CHECK(evaluate2(phi, eu, eu).is_zero());
  // Components outside g_- are ignored.
  CHECK(evaluate2(phi, eu + c.pd.Z, ev + AlgebraElement::basis(g.e_index(u == 0 ? 1 : 0))) ==
        evaluate2(phi, eu, ev));
  // Bilinearity.
  CHECK(evaluate2(phi, Rat(3) * eu, ev) == Rat(3) * evaluate2(phi, eu, ev));
}

TEST_CASE("degree split reconstitutes and classifies regularity") {
  std::mt19937 rng(37);
  Ctx c("A3", {1, 3});
  for (int trial = 0; trial < 30; ++trial) {
    const Cochain x = rand_cochain(c.pd, 2, rng, 5);
    Cochain sum(c.pd, 2);
    for (const auto& [d, comp] : degree_split(x)) {
      CHECK_FALSE(comp.is_zero());
      for (const auto& [key, v] : comp.entries()) {
        // Homogeneity of each piece.
        Cochain single(c.pd, 2);
        single.add(key, v);
        const auto ds = degree_split(single);
        CHECK(ds.size() == 1);
        CHECK(ds.begin()->first == d);
      }
      sum += comp;
    }
    CHECK(sum == x);
  }

  const auto rn_zero = regularity_normality(Cochain(c.pd, 2));
  CHECK(rn_zero.regular);
  CHECK(rn_zero.normal);
  CHECK(rn_zero.degrees.empty());

  // A cochain valued in the lowest root space has nonpositive degree: not regular.
  const auto& rs = *c.rs;
  const auto& g = *c.alg;
  const auto gm = gm_roots(c.pd);
  Cochain low(c.pd, 2);
  low.add({gm[0], gm[1]}, AlgebraElement::basis(g.e_index(rs.neg(rs.num_pos() - 1))));
  const auto rn_low = regularity_normality(low);
  CHECK_FALSE(rn_low.regular);
}
