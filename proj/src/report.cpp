#include "symgap/report.hpp"

#include "symgap/prolong.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symgap {

namespace {

constexpr const char* kSchema = "symgap/1";

// Owns the algebra chain for one request; members are reference-linked in
// declaration order, so the struct must never be copied or moved.
struct Context {
  RootSystem rs;
  ChevalleyAlgebra alg;
  ParabolicData pd;
  Context(SimpleType t, const std::vector<int>& cross)
      : rs(t), alg(rs), pd(build_parabolic(alg, cross)) {}
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
};

OrderedJson rat_vec_json(const std::vector<Rat>& v) {
  OrderedJson arr = OrderedJson::array();
  for (const Rat& x : v) arr.push_back(rat_str(x));
  return arr;
}

std::string rat_vec_text(const std::vector<Rat>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << rat_str(v[i]);
  os << ")";
  return os.str();
}

std::string int_set_text(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

std::string word_text(const HasseWord2& w) {
  return "(" + std::to_string(w.j) + "," + std::to_string(w.k) + ")";
}

std::string dims_text(const std::map<int, long long>& dims) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [k, d] : dims) {
    os << (first ? "" : ", ") << k << ": " << d;
    first = false;
  }
  os << "}";
  return os.str();
}

std::vector<HarmonicModule> selected_modules(const Context& ctx,
                                             const std::optional<HasseWord2>& pick) {
  std::vector<HarmonicModule> all = harmonic_modules(ctx.pd);
  if (!pick) return all;
  for (const HarmonicModule& m : all)
    if (m.w == *pick) return {m};
  throw std::invalid_argument("--module " + word_text(*pick) +
                              " is not a length-2 Hasse word for this parabolic");
}

const ModuleBound* bound_for(const UpperBounds& ub, const HasseWord2& w) {
  for (const ModuleBound& b : ub.per_module)
    if (b.module.w == w) return &b;
  return nullptr;
}

OrderedJson harmonic_json(const HarmonicModule& m) {
  OrderedJson j;
  j["w"] = {m.w.j, m.w.k};
  j["mu_fw"] = rat_vec_json(m.mu_fw);
  j["mu_simple"] = rat_vec_json(m.mu);
  j["degree"] = m.degree;
  j["J_mu"] = m.J_mu;
  j["dim"] = m.dim;
  j["regular"] = m.regular;
  return j;
}

OrderedJson bound_json(const ModuleBound& b) {
  OrderedJson j;
  j["module"] = {b.module.w.j, b.module.w.k};
  j["U_mu"] = b.U_mu;
  j["a0_dim"] = b.a0_dim;
  OrderedJson dims = OrderedJson::object();
  for (const auto& [k, d] : b.prolongation_dims) dims[std::to_string(k)] = d;
  j["prolongation_dims"] = dims;
  return j;
}

OrderedJson kappa_support_json(const Context& ctx, const Cochain& kappa) {
  OrderedJson arr = OrderedJson::array();
  for (const auto& [key, value] : kappa.entries()) {
    OrderedJson entry;
    OrderedJson slots = OrderedJson::array();
    for (int r : key)
      slots.push_back(ctx.alg.describe(AlgebraElement::basis(ctx.alg.e_index(r))));
    entry["slots"] = slots;
    entry["value"] = ctx.alg.describe(value);
    arr.push_back(entry);
  }
  return arr;
}

std::string kappa_support_text(const Context& ctx, const Cochain& kappa) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, value] : kappa.entries()) {
    os << (first ? "" : "; ");
    first = false;
    for (std::size_t i = 0; i < key.size(); ++i)
      os << (i ? "^" : "")
         << ctx.alg.describe(AlgebraElement::basis(ctx.alg.e_index(key[i])));
    os << " -> " << ctx.alg.describe(value);
  }
  return os.str();
}

// --- seeded cochains for the differential identities ---------------------

std::vector<std::vector<int>> combinations(const std::vector<int>& items, int k,
                                           std::size_t cap) {
  std::vector<std::vector<int>> out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  const int n = static_cast<int>(items.size());
  if (n < k) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (out.size() < cap) {
    std::vector<int> key;
    key.reserve(static_cast<std::size_t>(k));
    for (int i : idx) key.push_back(items[static_cast<std::size_t>(i)]);
    out.push_back(std::move(key));
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < k; ++q)
      idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q) - 1] + 1;
  }
  return out;
}

Cochain seeded_cochain(const ParabolicData& pd, int arity, unsigned seed) {
  std::vector<int> roots;
  for (int gi : pd.g_minus_indices()) roots.push_back(pd.alg->root_of(gi));
  Cochain c(pd, arity);
  const std::vector<std::vector<int>> keys = combinations(roots, arity, 24);
  const int dim = pd.alg->dim();
  unsigned i = 0;
  for (const std::vector<int>& key : keys) {
    const int gidx = static_cast<int>((seed * 13 + 7 * i) % static_cast<unsigned>(dim));
    const Rat coeff((seed * 31 + i) % 5 + 1);
    c.add(key, AlgebraElement::basis(gidx, coeff));
    ++i;
  }
  return c;
}

// --- verify checks --------------------------------------------------------

struct CheckOutcome {
  bool pass = true;
  bool skipped = false;
  std::string witness;
};

CheckOutcome fail_with(std::string w) {
  CheckOutcome o;
  o.pass = false;
  o.witness = std::move(w);
  return o;
}

CheckOutcome check_jacobi(const Context& ctx, const std::vector<HarmonicModule>& mods) {
  try {
    ctx.alg.verify_jacobi();
  } catch (const std::logic_error& e) {
    return fail_with(std::string("ambient algebra: ") + e.what());
  }
  for (const HarmonicModule& m : mods) {
    if (!m.regular) continue;
    for (int sign : {+1, -1}) {
      try {
        build_canonical_model(ctx.pd, m, sign);
      } catch (const std::invalid_argument&) {
        // Excluded low-rank case: no model to check.
      } catch (const std::logic_error& e) {
        return fail_with("module " + word_text(m.w) + " sign " + std::to_string(sign) +
                         ": " + e.what());
      }
    }
  }
  return {};
}

CheckOutcome check_harmonic(const Context& ctx, const std::vector<HarmonicModule>& mods) {
  for (const HarmonicModule& m : mods) {
    const Cochain phi0 = phi0_lowest_weight_vector(ctx.pd, m);
    if (!del(phi0).is_zero())
      return fail_with("module " + word_text(m.w) + ": del phi0 != 0");
    if (!delstar(phi0).is_zero())
      return fail_with("module " + word_text(m.w) + ": delstar phi0 != 0");
    if (!box(phi0).is_zero())
      return fail_with("module " + word_text(m.w) + ": box phi0 != 0");
    if (!(phi0.weight() == m.mu))
      return fail_with("module " + word_text(m.w) + ": phi0 weight is not mu");
  }
  return {};
}

CheckOutcome check_hodge(const Context& ctx, long long cap, OrderedJson& exported) {
  const HodgeOracleResult h = hodge_oracle(ctx.pd, cap);
  OrderedJson j;
  j["skipped"] = h.skipped;
  j["skip_reason"] = h.skip_reason;
  j["dim_c2"] = h.dim_c2;
  j["dim_im_del"] = h.dim_im_del;
  j["dim_ker_box"] = h.dim_ker_box;
  j["dim_im_delstar"] = h.dim_im_delstar;
  j["dim_h2"] = h.dim_h2;
  j["kernel_match"] = h.kernel_match;
  exported = j;
  if (h.skipped) {
    CheckOutcome o;
    o.skipped = true;
    o.witness = h.skip_reason;
    return o;
  }
  long long kostant = 0;
  for (const HarmonicModule& m : harmonic_modules(ctx.pd)) kostant += m.dim;
  if (h.dim_ker_box != kostant)
    return fail_with("dim ker box " + std::to_string(h.dim_ker_box) +
                     " != module dim sum " + std::to_string(kostant));
  if (h.dim_h2 != h.dim_ker_box)
    return fail_with("cohomology dim " + std::to_string(h.dim_h2) +
                     " != harmonic dim " + std::to_string(h.dim_ker_box));
  if (h.dim_im_del + h.dim_ker_box + h.dim_im_delstar != h.dim_c2)
    return fail_with("Hodge summands do not fill C^2");
  if (!h.kernel_match) return fail_with("ker box != ker del cap ker delstar");
  return {};
}

CheckOutcome check_annihilator(const Context& ctx, const std::vector<HarmonicModule>& mods) {
  for (const HarmonicModule& m : mods) {
    try {
      annihilator_closed_form(ctx.pd, m);
    } catch (const std::logic_error& e) {
      return fail_with("module " + word_text(m.w) + ": " + e.what());
    }
  }
  return {};
}

Rat weight_on_cartan(const Context& ctx, const Weight& w, const AlgebraElement& h) {
  Rat out(0);
  for (const auto& [gidx, c] : h.terms()) {
    if (!ctx.alg.is_cartan(gidx))
      throw std::logic_error("weight_on_cartan: element outside the Cartan");
    out += c * ctx.rs.pair_coroot(w, ctx.rs.simple_root_index(gidx + 1));
  }
  return out;
}

CheckOutcome check_mu(const Context& ctx, const std::vector<HarmonicModule>& mods) {
  if (ctx.rs.rank() < 3) return {};
  for (const HarmonicModule& m : mods) {
    if (!m.regular) continue;
    // Sign pattern: coordinates away from the word's nodes are negative and
    // at least one of the word's coordinates is positive.
    for (int i = 1; i <= ctx.rs.rank(); ++i) {
      const Rat mi = m.mu[static_cast<std::size_t>(i) - 1];
      if (i != m.w.j && i != m.w.k && !(mi < 0))
        return fail_with("module " + word_text(m.w) + ": mu coordinate " +
                         std::to_string(i) + " is not negative");
    }
    if (!(m.mu[static_cast<std::size_t>(m.w.j) - 1] > 0 ||
          m.mu[static_cast<std::size_t>(m.w.k) - 1] > 0))
      return fail_with("module " + word_text(m.w) + ": no positive mu coordinate");

    // Generic kernel witness: H0 with mu(H0) = 0 missing every hyperplane
    // alpha + beta = 0.
    AlgebraElement h0;
    try {
      h0 = generic_kernel_element(ctx.pd, m.mu);
    } catch (const std::logic_error& e) {
      return fail_with("module " + word_text(m.w) + ": " + e.what());
    }
    if (weight_on_cartan(ctx, m.mu, h0) != 0)
      return fail_with("module " + word_text(m.w) + ": mu(H0) != 0");
    const int np = ctx.rs.num_pos();
    for (int a = 0; a < np; ++a) {
      const Weight wa = to_weight(ctx.rs.root(a));
      if (weight_on_cartan(ctx, wa, h0) == 0)
        return fail_with("module " + word_text(m.w) + ": positive root vanishes on H0");
      for (int b = 0; b < np; ++b) {
        Weight sum = wa;
        const Root& rb = ctx.rs.root(b);
        for (std::size_t q = 0; q < sum.size(); ++q) sum[q] += rb[q];
        if (weight_on_cartan(ctx, sum, h0) == 0)
          return fail_with("module " + word_text(m.w) +
                           ": a positive-root pair sum vanishes on H0");
      }
    }
  }
  return {};
}

CheckOutcome check_twistor(const Context& ctx, const std::vector<HarmonicModule>& mods) {
  for (const HarmonicModule& m : mods) {
    if (!m.regular) continue;
    std::vector<int> target;
    try {
      target = twistor_descend(ctx.alg, ctx.pd.crossed, m.w);
    } catch (const std::logic_error& e) {
      return fail_with("module " + word_text(m.w) + ": " + e.what());
    }
    const ParabolicData tpd = build_parabolic(ctx.alg, target);
    const HarmonicModule tm = harmonic_module(tpd, m.w);
    if (tm.degree < 1)
      return fail_with("module " + word_text(m.w) + ": descended degree " +
                       std::to_string(tm.degree) + " is not positive");
    const GradedSubalgebra pr = tanaka_prolong(tpd, annihilator_closed_form(tpd, tm));
    for (const auto& [k, basis] : pr.basis)
      if (k >= 1 && !basis.empty())
        return fail_with("module " + word_text(m.w) +
                         ": positive prolongation survives descent at degree " +
                         std::to_string(k));
  }
  return {};
}

CheckOutcome check_differentials(const Context& ctx) {
  for (unsigned seed : {1u, 2u}) {
    for (int arity : {0, 1}) {
      const Cochain c = seeded_cochain(ctx.pd, arity, seed);
      if (!del(del(c)).is_zero())
        return fail_with("delized twice is nonzero on a seeded " +
                         std::to_string(arity) + "-cochain");
    }
    const Cochain c3 = seeded_cochain(ctx.pd, 3, seed);
    if (!delstar(delstar(c3)).is_zero())
      return fail_with("delstar twice is nonzero on a seeded 3-cochain");
    const Cochain a = seeded_cochain(ctx.pd, 1, seed + 2);
    const Cochain b = seeded_cochain(ctx.pd, 2, seed + 3);
    if (cochain_pairing(del(a), b) != cochain_pairing(a, delstar(b)))
      return fail_with("del/delstar adjointness fails on seeded cochains");
  }
  return {};
}

}  // namespace

RealForm parse_real_form(const std::string& name) {
  if (name == "split") return RealForm::split;
  if (name == "complex") return RealForm::complex_form;
  throw std::invalid_argument("unknown real form '" + name + "' (expected split or complex)");
}

std::string real_form_str(RealForm r) {
  return r == RealForm::split ? "split" : "complex";
}

const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names = {
      "jacobi", "harmonic", "hodge", "annihilator", "mu", "twistor", "differentials"};
  return names;
}

CommandResult cmd_analyze(const AnalysisRequest& req) {
  Context ctx(req.algebra, req.cross);
  const std::vector<HarmonicModule> shown = selected_modules(ctx, req.module);
  const UpperBounds ub = upper_bounds(ctx.pd);

  CommandResult res;
  OrderedJson& j = res.json;
  j["schema"] = kSchema;
  j["command"] = "analyze";
  j["algebra"] = req.algebra.str();
  j["cross"] = ctx.pd.crossed;
  j["real"] = real_form_str(req.real);
  if (req.real == RealForm::split) j["lattice"] = lattice_str(req.lattice);
  j["dim"] = ctx.alg.dim();
  j["depth"] = ctx.pd.depth;

  std::ostringstream text;
  text << "symgap analyze\n";
  text << "algebra " << req.algebra.str() << "  cross " << int_set_text(ctx.pd.crossed)
       << "  real " << real_form_str(req.real);
  if (req.real == RealForm::split) text << "  lattice " << lattice_str(req.lattice);
  text << "\n";
  text << "dim " << ctx.alg.dim() << "  depth " << ctx.pd.depth << "  modules "
       << shown.size() << "\n";

  if (shown.empty()) {
    j["note"] = "no length-2 Hasse words";
    text << "no length-2 Hasse words\n";
  }

  OrderedJson modules = OrderedJson::array();
  for (const HarmonicModule& m : shown) {
    OrderedJson mj = harmonic_json(m);
    text << "\nmodule w=" << word_text(m.w) << "  degree " << m.degree << "  regular "
         << (m.regular ? "yes" : "no") << "\n";
    text << "  mu_fw " << rat_vec_text(m.mu_fw) << "  mu_simple " << rat_vec_text(m.mu)
         << "  J_mu " << int_set_text(m.J_mu) << "  dim " << m.dim << "\n";

    if (m.regular) {
      const ModuleBound* b = bound_for(ub, m.w);
      if (b != nullptr) {
        mj["prolongation"] = bound_json(*b);
        text << "  bound a0_dim " << b->a0_dim << "  prolongation_dims "
             << dims_text(b->prolongation_dims) << "  U_mu " << b->U_mu << "\n";
      }

      const std::vector<int> target = twistor_descend(ctx.alg, ctx.pd.crossed, m.w);
      const ParabolicData tpd = build_parabolic(ctx.alg, target);
      const HarmonicModule tm = harmonic_module(tpd, m.w);
      OrderedJson tj;
      tj["target_cross"] = target;
      tj["target_degree"] = tm.degree;
      mj["twistor"] = tj;
      text << "  twistor target cross " << int_set_text(target) << "  target degree "
           << tm.degree << "\n";

      OrderedJson model;
      try {
        const AlgebraicModel am = build_canonical_model(ctx.pd, m, +1);
        model["f_dim"] = am.f_basis.size();
        model["kappa_support"] = kappa_support_json(ctx, am.kappa);
        OrderedJson checks;
        // build_canonical_model verifies before returning, so a returned
        // model certifies every check below.
        for (const char* name : {"jacobi", "M1", "M2", "M3", "f0_kappa", "gr_in_a"})
          checks[name] = true;
        model["checks"] = checks;
        text << "  model f_dim " << am.f_basis.size()
             << "  checks jacobi M1 M2 M3 f0_kappa gr_in_a pass\n";
        text << "  kappa " << kappa_support_text(ctx, am.kappa) << "\n";
        if (req.real == RealForm::split) {
          const SignCheckResult sr = split_real_sign_check(ctx.pd, m, req.lattice);
          OrderedJson sj;
          sj["unique"] = sr.equivalent;
          sj["witness"] = sr.witness;
          model["split_real"] = sj;
          text << "  split_real unique " << (sr.equivalent ? "yes" : "no") << "  witness "
               << sr.witness << "\n";
        }
      } catch (const std::invalid_argument& e) {
        model = OrderedJson::object();
        model["excluded"] = e.what();
        text << "  model excluded: " << e.what() << "\n";
      } catch (const std::logic_error& e) {
        model = OrderedJson::object();
        model["failed"] = e.what();
        text << "  model FAILED: " << e.what() << "\n";
        res.exit_code = 1;
      }
      mj["model"] = model;
    }
    modules.push_back(mj);
  }
  j["modules"] = modules;

  if (ub.defined) {
    j["U"] = ub.U;
    text << "\nU " << ub.U << "\n";
  } else {
    j["U"] = nullptr;
    text << "\nU undefined\n";
  }
  res.text = text.str();
  return res;
}

CommandResult cmd_table(const std::vector<SimpleType>& algebras, const std::vector<int>& cross) {
  if (algebras.empty())
    throw std::invalid_argument("table: at least one --algebra is required");

  CommandResult res;
  OrderedJson& j = res.json;
  j["schema"] = kSchema;
  j["command"] = "table";
  j["cross"] = cross;

  std::ostringstream text;
  text << "symgap table\ncross " << int_set_text(cross) << "\n";

  OrderedJson rows = OrderedJson::array();
  for (const SimpleType& t : algebras) {
    Context ctx(t, cross);
    const UpperBounds ub = upper_bounds(ctx.pd);
    OrderedJson row;
    row["algebra"] = t.str();
    OrderedJson mods = OrderedJson::array();
    text << t.str() << "  ";
    for (const ModuleBound& b : ub.per_module) {
      OrderedJson mj;
      mj["w"] = {b.module.w.j, b.module.w.k};
      mj["degree"] = b.module.degree;
      mj["U_mu"] = b.U_mu;
      mods.push_back(mj);
      text << word_text(b.module.w) << ": degree " << b.module.degree << ", U_mu "
           << b.U_mu << "  ";
    }
    row["modules"] = mods;
    if (ub.defined) {
      row["U"] = ub.U;
      text << "U " << ub.U << "\n";
    } else {
      row["U"] = nullptr;
      text << "U undefined\n";
    }
    rows.push_back(row);
  }
  j["rows"] = rows;
  res.text = text.str();
  return res;
}

CommandResult cmd_verify(const AnalysisRequest& req) {
  Context ctx(req.algebra, req.cross);

  std::vector<std::string> selected;
  if (req.checks.empty()) {
    selected = verify_check_names();
  } else {
    for (const std::string& name : req.checks) {
      if (name == "all") {
        selected = verify_check_names();
        break;
      }
      if (std::find(verify_check_names().begin(), verify_check_names().end(), name) ==
          verify_check_names().end())
        throw std::invalid_argument("unknown check '" + name + "'");
    }
    if (selected.empty()) {
      // Preserve the canonical order regardless of how flags were given.
      for (const std::string& name : verify_check_names())
        if (std::find(req.checks.begin(), req.checks.end(), name) != req.checks.end())
          selected.push_back(name);
    }
  }

  const std::vector<HarmonicModule> mods = selected_modules(ctx, req.module);

  CommandResult res;
  OrderedJson& j = res.json;
  j["schema"] = kSchema;
  j["command"] = "verify";
  j["algebra"] = req.algebra.str();
  j["cross"] = ctx.pd.crossed;

  std::ostringstream text;
  text << "symgap verify\nalgebra " << req.algebra.str() << "  cross "
       << int_set_text(ctx.pd.crossed) << "\n";

  OrderedJson checks = OrderedJson::object();
  OrderedJson oracle;
  bool any_fail = false;
  bool any_skip = false;
  for (const std::string& name : selected) {
    CheckOutcome o;
    if (name == "jacobi") o = check_jacobi(ctx, mods);
    else if (name == "harmonic") o = check_harmonic(ctx, mods);
    else if (name == "hodge") o = check_hodge(ctx, req.oracle_cap, oracle);
    else if (name == "annihilator") o = check_annihilator(ctx, mods);
    else if (name == "mu") o = check_mu(ctx, mods);
    else if (name == "twistor") o = check_twistor(ctx, mods);
    else if (name == "differentials") o = check_differentials(ctx);

    OrderedJson cj;
    cj["pass"] = o.pass;
    cj["skipped"] = o.skipped;
    cj["witness"] = o.witness;
    checks[name] = cj;
    any_fail = any_fail || !o.pass;
    any_skip = any_skip || o.skipped;

    text << name;
    for (std::size_t pad = name.size(); pad < 14; ++pad) text << ' ';
    text << (o.pass ? (o.skipped ? "SKIP" : "PASS") : "FAIL");
    if (!o.witness.empty()) text << "  " << o.witness;
    text << "\n";
  }
  j["checks"] = checks;
  if (!oracle.is_null()) {
    j["hodge_oracle"] = oracle;
    if (!oracle["skipped"].get<bool>())
      text << "hodge_oracle dim_c2 " << oracle["dim_c2"].get<long long>() << "  im_del "
           << oracle["dim_im_del"].get<long long>() << "  ker_box "
           << oracle["dim_ker_box"].get<long long>() << "  im_delstar "
           << oracle["dim_im_delstar"].get<long long>() << "\n";
  }
  j["all_pass"] = !any_fail;
  text << (any_fail ? "some checks FAILED" : "all checks pass") << "\n";

  res.exit_code = any_fail ? 1 : (any_skip ? 3 : 0);
  res.text = text.str();
  return res;
}

}  // namespace symgap
