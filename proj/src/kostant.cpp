#include "symgap/kostant.hpp"

#include <algorithm>
#include <stdexcept>

namespace symgap {

std::vector<HasseWord2> hasse_words(const ParabolicData& pd) {
  const RootSystem& rs = pd.alg->roots();
  std::vector<HasseWord2> out;
  for (int j = 1; j <= rs.rank(); ++j) {
    if (!pd.is_crossed(j)) continue;
    for (int k = 1; k <= rs.rank(); ++k) {
      if (k == j) continue;
      if (!pd.is_crossed(k) && rs.c(j, k) >= 0) continue;
      // sigma_j and sigma_k commute when c_{jk} = 0; (jk) and (kj) are then
      // the same Weyl element, so keep only the sorted representative.
      if (pd.is_crossed(k) && rs.c(j, k) == 0 && j > k) continue;
      out.push_back({j, k});
    }
  }
  return out;
}

HarmonicModule harmonic_module(const ParabolicData& pd, const HasseWord2& w) {
  const RootSystem& rs = pd.alg->roots();
  const auto words = hasse_words(pd);
  if (std::find(words.begin(), words.end(), w) == words.end())
    throw std::invalid_argument("not a length-2 word for this parabolic");

  HarmonicModule m;
  m.w = w;

  const Weight lambda = to_weight(rs.highest_root());
  const std::vector<Rat> r = rs.to_fw(lambda);

  // Route 1: mu = -(w . lambda) by the affine action.
  Weight mu_affine = rs.affine_action({w.j, w.k}, lambda);
  for (Rat& c : mu_affine) c = -c;

  // Route 2: mu = -lambda + (r_j+1) alpha_j + (r_k+1)(alpha_k - c_{kj} alpha_j).
  Weight mu_closed(rs.rank(), Rat(0));
  for (int i = 0; i < rs.rank(); ++i) mu_closed[i] = -lambda[i];
  const Rat fj = r[w.j - 1] + 1, fk = r[w.k - 1] + 1;
  mu_closed[w.j - 1] += fj;
  mu_closed[w.k - 1] += fk;
  mu_closed[w.j - 1] -= fk * rs.c(w.k, w.j);
  if (mu_affine != mu_closed)
    throw std::logic_error("lowest weight disagreement between affine action and closed form");
  m.mu = mu_affine;
  m.mu_fw = rs.to_fw(m.mu);

  m.degree = static_cast<int>(to_ll(pd.weight_degree(m.mu)));
  m.regular = m.degree >= 1;
  for (int i = 1; i <= rs.rank(); ++i)
    if (!pd.is_crossed(i) && m.mu_fw[i - 1] != 0) m.J_mu.push_back(i);

  m.cov_a = rs.simple_root_index(w.j);
  const Weight sk = rs.simple_reflection(w.j, to_weight(rs.root(rs.simple_root_index(w.k))));
  Root sk_root(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) sk_root[i] = static_cast<int>(to_ll(sk[i]));
  m.cov_b = *rs.root_index(sk_root);

  Weight wl = lambda;
  for (Rat& c : wl) c = -c;
  wl = rs.weyl_apply({w.j, w.k}, wl);
  Root wl_root(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) wl_root[i] = static_cast<int>(to_ll(wl[i]));
  const auto vidx = rs.root_index(wl_root);
  if (!vidx) throw std::logic_error("lowest weight vector not of root-vector form");
  m.val = *vidx;

  m.dim = module_dim(pd, m.mu);
  return m;
}

std::vector<HarmonicModule> harmonic_modules(const ParabolicData& pd) {
  std::vector<HarmonicModule> out;
  for (const HasseWord2& w : hasse_words(pd)) out.push_back(harmonic_module(pd, w));
  return out;
}

long long module_dim(const ParabolicData& pd, const Weight& mu) {
  const RootSystem& rs = pd.alg->roots();
  Weight hw(rs.rank());  // highest weight of the dual description: -mu
  for (int i = 0; i < rs.rank(); ++i) hw[i] = -mu[i];
  for (int i = 1; i <= rs.rank(); ++i) {
    if (pd.is_crossed(i)) continue;
    if (rs.pair_coroot(hw, rs.simple_root_index(i)) < 0)
      throw std::logic_error("module weight is not dominant on the Levi factor");
  }
  const Weight rho = rs.rho();
  Rat dim(1);
  for (int idx = 0; idx < rs.num_pos(); ++idx) {
    const Root& a = rs.root(idx);
    bool levi = true;
    for (int j : pd.crossed) levi = levi && a[j - 1] == 0;
    if (!levi) continue;
    Weight num = rho;
    for (int i = 0; i < rs.rank(); ++i) num[i] += hw[i];
    dim *= rs.pair_coroot(num, idx) / rs.pair_coroot(rho, idx);
  }
  return to_ll(dim);
}

Cochain phi0_lowest_weight_vector(const ParabolicData& pd, const HarmonicModule& m) {
  const RootSystem& rs = pd.alg->roots();
  Cochain phi(pd, 2);
  phi.add({rs.neg(m.cov_a), rs.neg(m.cov_b)},
          AlgebraElement::basis(pd.alg->e_index(m.val)));
  return phi;
}

}  // namespace symgap
