#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "symgap/linalg.hpp"
#include "symgap/model.hpp"

#include <stdexcept>

using namespace symgap;

namespace {

struct Case {
  RootSystem rs;
  ChevalleyAlgebra alg;
  ParabolicData pd;
  Case(const std::string& name, const std::vector<int>& crossed)
      : rs(SimpleType::parse(name)), alg(rs), pd(build_parabolic(alg, crossed)) {}
};

HarmonicModule module_of(const ParabolicData& pd, int j, int k) {
  return harmonic_module(pd, HasseWord2{j, k});
}

std::vector<Rat> coords(const ChevalleyAlgebra& g, const AlgebraElement& x) {
  std::vector<Rat> v(static_cast<std::size_t>(g.dim()), Rat(0));
  for (const auto& [gidx, c] : x.terms()) v[static_cast<std::size_t>(gidx)] = c;
  return v;
}

}  // namespace

TEST_CASE("canonical model for G2 crossed {2}") {
  Case c("G2", {2});
  const HarmonicModule m = module_of(c.pd, 2, 1);
  const AlgebraicModel am = build_canonical_model(c.pd, m, +1);

  CHECK(am.f_basis.size() == 7);

  const ModelReport rep = verify_algebraic_model(am);
  CHECK(rep.all_pass());
  CHECK(rep.first_failure().empty());

  // kappa is supported on the single slot (e_{-a2}, e_{-a1-a2}) and sends it
  // to the lowest-weight root vector; every other g_- pair evaluates to zero.
  const RootSystem& rs = c.rs;
  const int a2 = rs.neg(*rs.root_index({0, 1}));
  const int a12 = rs.neg(*rs.root_index({1, 1}));
  const AlgebraElement ea2 = AlgebraElement::basis(c.alg.e_index(a2));
  const AlgebraElement ea12 = AlgebraElement::basis(c.alg.e_index(a12));
  const AlgebraElement low = AlgebraElement::basis(c.alg.e_index(m.val));
  CHECK(evaluate2(am.kappa, ea2, ea12) == low);
  CHECK(am.kappa.entries().size() == 1);
  for (int gx : c.pd.g_minus_indices()) {
    for (int gy : c.pd.g_minus_indices()) {
      const int rx = c.alg.root_of(gx), ry = c.alg.root_of(gy);
      if ((rx == a2 && ry == a12) || (rx == a12 && ry == a2)) continue;
      CHECK(evaluate2(am.kappa, AlgebraElement::basis(gx), AlgebraElement::basis(gy))
                .is_zero());
    }
  }

  // The sign -1 companion is a valid model whose curvature is the negative.
  const AlgebraicModel neg = build_canonical_model(c.pd, m, -1);
  CHECK(verify_algebraic_model(neg).all_pass());
  AlgebraElement flipped = evaluate2(neg.kappa, ea2, ea12);
  flipped += low;
  CHECK(flipped.is_zero());

  // dim f equals the module's symmetry bound.
  const UpperBounds ub = upper_bounds(c.pd);
  REQUIRE(ub.defined);
  CHECK(ub.U == 7);
  CHECK(static_cast<long long>(am.f_basis.size()) == ub.per_module.at(0).U_mu);
}

TEST_CASE("gr of the canonical model equals the prolongation, degreewise") {
  Case c("A3", {1});
  const HarmonicModule m = module_of(c.pd, 1, 2);
  const AlgebraicModel am = build_canonical_model(c.pd, m, +1);
  CHECK(verify_algebraic_model(am).all_pass());

  const GradedSubalgebra prol =
      tanaka_prolong(c.pd, annihilator_closed_form(c.pd, m));
  CHECK(static_cast<long long>(am.f_basis.size()) == prol.total_dim());
  for (const auto& [d, els] : prol.basis) {
    RowSpan from_f(static_cast<std::size_t>(c.alg.dim()));
    for (const AlgebraElement& x : am.f_basis) {
      const DegreeResult dr = degree(c.pd, x);
      if (dr.homogeneous && dr.degree == d) from_f.add(coords(c.alg, x));
    }
    REQUIRE(from_f.rank() == els.size());
    for (const AlgebraElement& b : els) CHECK(from_f.contains(coords(c.alg, b)));
  }
}

TEST_CASE("flat models pass every check") {
  for (const char* name : {"A2", "B2", "G2"}) {
    Case c(name, {1});
    const AlgebraicModel flat = build_flat_model(c.pd);
    CHECK(flat.kappa.is_zero());
    CHECK(static_cast<int>(flat.f_basis.size()) == c.alg.dim());
    const ModelReport rep = verify_algebraic_model(flat);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("fault injection: foreign curvature component trips f0_kappa") {
  Case c("G2", {2});
  const HarmonicModule m = module_of(c.pd, 2, 1);
  AlgebraicModel am = build_canonical_model(c.pd, m, +1);

  // Contaminate the single kappa slot with a second root vector of a
  // different weight; the annihilator of phi0 no longer fixes the value.
  const RootSystem& rs = c.rs;
  const int key_a = rs.neg(*rs.root_index({0, 1}));
  const int key_b = rs.neg(*rs.root_index({1, 1}));
  const int foreign = rs.neg(*rs.root_index({2, 1}));
  Cochain bad(c.pd, 2);
  bad.add({key_a, key_b}, AlgebraElement::basis(c.alg.e_index(foreign)));
  am.kappa += bad;

  const ModelReport rep = verify_algebraic_model(am);
  CHECK_FALSE(rep.f0_kappa.pass);
  CHECK_FALSE(rep.f0_kappa.witness.empty());
  CHECK_FALSE(rep.all_pass());
}

TEST_CASE("builder preconditions and exclusions") {
  SUBCASE("A2 refused for every crossing") {
    for (const std::vector<int>& cr : {std::vector<int>{1}, {2}, {1, 2}}) {
      Case c("A2", cr);
      const std::vector<HarmonicModule> mods = harmonic_modules(c.pd);
      for (const HarmonicModule& m : mods)
        CHECK_THROWS_AS(build_canonical_model(c.pd, m, +1), std::invalid_argument);
    }
  }
  SUBCASE("B2 with the long root crossed refused, short-root side builds") {
    Case b1("B2", {1});
    for (const HarmonicModule& m : harmonic_modules(b1.pd))
      CHECK_THROWS_AS(build_canonical_model(b1.pd, m, +1), std::invalid_argument);
    Case b12("B2", {1, 2});
    for (const HarmonicModule& m : harmonic_modules(b12.pd))
      CHECK_THROWS_AS(build_canonical_model(b12.pd, m, +1), std::invalid_argument);

    Case b2("B2", {2});
    const std::vector<HarmonicModule> mods = harmonic_modules(b2.pd);
    REQUIRE(mods.size() == 1);
    if (mods[0].regular) {
      const AlgebraicModel am = build_canonical_model(b2.pd, mods[0], +1);
      CHECK(verify_algebraic_model(am).all_pass());
    }
  }
  SUBCASE("C2 mirrors B2 under the node swap") {
    Case c2("C2", {2});
    for (const HarmonicModule& m : harmonic_modules(c2.pd))
      CHECK_THROWS_AS(build_canonical_model(c2.pd, m, +1), std::invalid_argument);
    Case c1("C2", {1});
    const std::vector<HarmonicModule> mods = harmonic_modules(c1.pd);
    REQUIRE(mods.size() == 1);
    if (mods[0].regular) {
      const AlgebraicModel am = build_canonical_model(c1.pd, mods[0], +1);
      CHECK(verify_algebraic_model(am).all_pass());
    }
  }
  SUBCASE("bad sign and nonpositive degree rejected") {
    Case c("G2", {2});
    const HarmonicModule m = module_of(c.pd, 2, 1);
    CHECK_THROWS_AS(build_canonical_model(c.pd, m, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_canonical_model(c.pd, m, 0), std::invalid_argument);

    Case borel("G2", {1, 2});
    const HarmonicModule lifted = module_of(borel.pd, 2, 1);
    REQUIRE_FALSE(lifted.regular);
    CHECK_THROWS_AS(build_canonical_model(borel.pd, lifted, +1), std::invalid_argument);
  }
}

TEST_CASE("G2 crossed {1} builds its canonical model") {
  Case c("G2", {1});
  const std::vector<HarmonicModule> mods = harmonic_modules(c.pd);
  REQUIRE(mods.size() == 1);
  REQUIRE(mods[0].regular);
  const AlgebraicModel am = build_canonical_model(c.pd, mods[0], +1);
  CHECK(verify_algebraic_model(am).all_pass());
  const UpperBounds ub = upper_bounds(c.pd);
  CHECK(static_cast<long long>(am.f_basis.size()) == ub.U);
  CHECK(ub.U == 7);
}

TEST_CASE("twistor descent targets") {
  SUBCASE("adjacent nodes collapse to the front node") {
    Case g2(std::string("G2"), {1, 2});
    const std::vector<int> t = twistor_descend(g2.alg, {1, 2}, HasseWord2{2, 1});
    CHECK(t == std::vector<int>{2});

    // The module carried over is first-degree at the target.
    ParabolicData pd2 = build_parabolic(g2.alg, t);
    CHECK(harmonic_module(pd2, HasseWord2{2, 1}).degree == 1);
  }
  SUBCASE("orthogonal nodes keep both crossings") {
    Case a3("A3", {1, 2, 3});
    CHECK(twistor_descend(a3.alg, {1, 2, 3}, HasseWord2{1, 3}) ==
          std::vector<int>{1, 3});
    CHECK(twistor_descend(a3.alg, {1, 2, 3}, HasseWord2{1, 2}) == std::vector<int>{1});
  }
  SUBCASE("ODE-pattern words descend to the second node") {
    for (const char* name : {"A3", "A4", "A5"}) {
      Case c(name, {1, 2});
      CHECK(twistor_descend(c.alg, {1, 2}, HasseWord2{2, 1}) == std::vector<int>{2});
    }
  }
  SUBCASE("foreign words rejected") {
    Case c("G2", {2});
    CHECK_THROWS_AS(twistor_descend(c.alg, {2}, HasseWord2{1, 2}), std::invalid_argument);
  }
}

TEST_CASE("descent preserves the bound and kills the positive part") {
  // Source parabolic {1,2}; the word (2,1) descends to {2} carrying the same
  // module, whose prolongation there has no positive part and the same size.
  Case src("A3", {1, 2});
  const HarmonicModule m_src = module_of(src.pd, 2, 1);
  REQUIRE(m_src.regular);
  const UpperBounds ub_src = upper_bounds(src.pd);
  long long u_src = -1;
  for (const ModuleBound& b : ub_src.per_module)
    if (b.module.w == HasseWord2{2, 1}) u_src = b.U_mu;
  REQUIRE(u_src > 0);

  const std::vector<int> target = twistor_descend(src.alg, {1, 2}, HasseWord2{2, 1});
  ParabolicData pd_t = build_parabolic(src.alg, target);
  const HarmonicModule m_t = harmonic_module(pd_t, HasseWord2{2, 1});
  REQUIRE(m_t.regular);

  const GradedSubalgebra prol =
      tanaka_prolong(pd_t, annihilator_closed_form(pd_t, m_t));
  CHECK(prol.total_dim() == u_src);
  for (const auto& [d, els] : prol.basis) {
    if (d > 0) CHECK(els.empty());
  }
}
