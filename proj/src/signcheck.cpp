#include "symgap/signcheck.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace symgap {

namespace {

std::vector<long long> to_ints(const std::vector<Rat>& w) {
  std::vector<long long> out;
  out.reserve(w.size());
  for (const Rat& c : w) out.push_back(to_ll(c));
  return out;
}

// Coefficients over the orthogonal eps basis from simple-root coordinates m.
// A_l lives in the sum-zero hyperplane of l+1 coordinates; B_l and D_l use l.
std::vector<long long> eps_a(const std::vector<long long>& m) {
  const int l = static_cast<int>(m.size());
  std::vector<long long> x(static_cast<std::size_t>(l) + 1);
  for (int k = 1; k <= l + 1; ++k) {
    const long long mk = k <= l ? m[static_cast<std::size_t>(k) - 1] : 0;
    const long long mk1 = k >= 2 ? m[static_cast<std::size_t>(k) - 2] : 0;
    x[static_cast<std::size_t>(k) - 1] = mk - mk1;
  }
  return x;
}

std::vector<long long> eps_b(const std::vector<long long>& m) {
  const int l = static_cast<int>(m.size());
  std::vector<long long> x(static_cast<std::size_t>(l));
  for (int k = 1; k <= l; ++k)
    x[static_cast<std::size_t>(k) - 1] =
        m[static_cast<std::size_t>(k) - 1] - (k >= 2 ? m[static_cast<std::size_t>(k) - 2] : 0);
  return x;
}

std::vector<long long> eps_d(const std::vector<long long>& m) {
  const int l = static_cast<int>(m.size());
  if (l < 4) throw std::invalid_argument("eps_d: rank must be at least 4");
  std::vector<long long> x(static_cast<std::size_t>(l));
  for (int k = 1; k <= l - 2; ++k)
    x[static_cast<std::size_t>(k) - 1] =
        m[static_cast<std::size_t>(k) - 1] - (k >= 2 ? m[static_cast<std::size_t>(k) - 2] : 0);
  // The fork: alpha_{l-1} = eps_{l-1} - eps_l and alpha_l = eps_{l-1} + eps_l.
  x[static_cast<std::size_t>(l) - 2] =
      m[static_cast<std::size_t>(l) - 2] - m[static_cast<std::size_t>(l) - 3] +
      m[static_cast<std::size_t>(l) - 1];
  x[static_cast<std::size_t>(l) - 1] =
      m[static_cast<std::size_t>(l) - 1] - m[static_cast<std::size_t>(l) - 2];
  return x;
}

struct TorusSolution {
  bool found = false;
  std::vector<int> signs;
};

// Smallest sign vector (fewest -1 entries, then earliest positions) whose
// character value on the exponents is -1.  det_one restricts to sign vectors
// of determinant +1 (an even count of -1 entries), the SL(l+1) case.
TorusSolution solve_torus(const std::vector<long long>& x, bool det_one) {
  const int r = static_cast<int>(x.size());
  std::vector<std::vector<int>> sets;
  for (unsigned mask = 1; mask < (1u << r); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < r; ++i)
      if (mask >> i & 1u) s.push_back(i);
    sets.push_back(std::move(s));
  }
  std::sort(sets.begin(), sets.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (const std::vector<int>& s : sets) {
    if (det_one && s.size() % 2 != 0) continue;
    long long pairing = 0;
    for (int i : s) pairing += x[static_cast<std::size_t>(i)];
    if (pairing % 2 == 0) continue;
    TorusSolution out;
    out.found = true;
    out.signs.assign(static_cast<std::size_t>(r), 1);
    for (int i : s) out.signs[static_cast<std::size_t>(i)] = -1;
    return out;
  }
  return {};
}

// exp(ad z) on a cochain.  z is a g_0 root vector, so the action shifts the
// weight by a fixed nonzero amount and is nilpotent; the cap is a trap only.
Cochain exp_action(const AlgebraElement& z, const Cochain& c) {
  Cochain acc = c;
  Cochain cur = c;
  for (int k = 1; !cur.is_zero(); ++k) {
    if (k > 256) throw std::logic_error("exp_action: action did not nilpotate");
    cur = cochain_action(z, cur);
    cur *= Rat(1, k);
    acc += cur;
  }
  return acc;
}

// Scalar of n_j = exp(e_j) exp(-f_j) exp(e_j) on the weight line through
// phi0; callers ensure sigma_j fixes the weight, so the image is an exact
// multiple and the scalar squares to one.
Rat weyl_scalar(const ParabolicData& pd, const Cochain& phi0, int node) {
  const ChevalleyAlgebra& alg = *pd.alg;
  const int idx = alg.roots().simple_root_index(node);
  const AlgebraElement e = AlgebraElement::basis(alg.e_index(idx));
  AlgebraElement minus_f = AlgebraElement::basis(alg.e_index(alg.roots().neg(idx)));
  minus_f *= Rat(-1);
  const Cochain image = exp_action(e, exp_action(minus_f, exp_action(e, phi0)));

  const auto& ref = *phi0.entries().begin();
  const auto& ref_term = ref.second.terms().front();
  const Rat c = image.value(ref.first).coeff(ref_term.first) / ref_term.second;
  Cochain scaled = phi0;
  scaled *= c;
  if (!(scaled == image)) throw std::logic_error("weyl_scalar: image is not a multiple");
  if (c * c != 1) throw std::logic_error("weyl_scalar: scalar does not square to one");
  return c;
}

}  // namespace

WeightLatticeSpec parse_lattice(const std::string& name) {
  if (name == "sc") return WeightLatticeSpec::simply_connected;
  if (name == "adjoint") return WeightLatticeSpec::adjoint;
  if (name == "sl") return WeightLatticeSpec::matrix_sl;
  if (name == "pgl") return WeightLatticeSpec::matrix_pgl;
  if (name == "so-split") return WeightLatticeSpec::matrix_so_split;
  throw std::invalid_argument("unknown lattice '" + name +
                              "' (expected sc, adjoint, sl, pgl, so-split)");
}

std::string lattice_str(WeightLatticeSpec spec) {
  switch (spec) {
    case WeightLatticeSpec::simply_connected: return "sc";
    case WeightLatticeSpec::adjoint: return "adjoint";
    case WeightLatticeSpec::matrix_sl: return "sl";
    case WeightLatticeSpec::matrix_pgl: return "pgl";
    case WeightLatticeSpec::matrix_so_split: return "so-split";
  }
  throw std::logic_error("lattice_str: bad enum value");
}

std::vector<long long> torus_character_exponents(const ParabolicData& pd,
                                                 const HarmonicModule& m,
                                                 WeightLatticeSpec spec) {
  const Family fam = pd.alg->roots().type().family;
  switch (spec) {
    case WeightLatticeSpec::simply_connected:
      return to_ints(m.mu_fw);
    case WeightLatticeSpec::adjoint:
      return to_ints(m.mu);
    case WeightLatticeSpec::matrix_sl:
    case WeightLatticeSpec::matrix_pgl:
      if (fam != Family::A)
        throw std::invalid_argument("matrix SL/PGL lattice requires a type A algebra");
      return eps_a(to_ints(m.mu));
    case WeightLatticeSpec::matrix_so_split:
      if (fam == Family::B) return eps_b(to_ints(m.mu));
      if (fam == Family::D) return eps_d(to_ints(m.mu));
      throw std::invalid_argument("matrix split-SO lattice requires a type B or D algebra");
  }
  throw std::logic_error("torus_character_exponents: bad enum value");
}

SignCheckResult split_real_sign_check(const ParabolicData& pd, const HarmonicModule& m,
                                      WeightLatticeSpec spec) {
  if (!m.regular)
    throw std::invalid_argument("split_real_sign_check: module must be regular");
  const std::vector<long long> x = torus_character_exponents(pd, m, spec);

  SignCheckResult res;
  const TorusSolution t = solve_torus(x, spec == WeightLatticeSpec::matrix_sl);
  if (t.found) {
    res.equivalent = true;
    res.torus_signs = t.signs;
    std::ostringstream os;
    os << "torus signs (";
    for (std::size_t i = 0; i < t.signs.size(); ++i) os << (i ? ", " : "") << t.signs[i];
    os << ")";
    res.witness = os.str();
    return res;
  }

  // Weyl phase: representatives n_j for uncrossed nodes fixing the weight.
  // Torus values and these scalars generate every reachable sign, so one
  // scalar of -1 decides; all +1 leaves -phi0 unreached by these witnesses.
  const Cochain phi0 = phi0_lowest_weight_vector(pd, m);
  for (int j = 1; j <= pd.alg->rank(); ++j) {
    if (pd.is_crossed(j) || m.mu_fw[static_cast<std::size_t>(j) - 1] != 0) continue;
    if (weyl_scalar(pd, phi0, j) == -1) {
      res.equivalent = true;
      res.weyl_node = j;
      res.witness = "Weyl reflection n_" + std::to_string(j);
      return res;
    }
  }
  res.witness = "not reachable by torus/Weyl witnesses";
  return res;
}

}  // namespace symgap
