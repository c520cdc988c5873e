#include "symgap/prolong.hpp"

#include "symgap/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace symgap {

namespace {

std::vector<Rat> to_coords(const AlgebraElement& x, int dim) {
  std::vector<Rat> v(dim);
  for (const auto& [gi, c] : x.terms()) v[gi] = c;
  return v;
}

AlgebraElement from_coords(const std::vector<Rat>& v, const std::vector<int>& support) {
  AlgebraElement out;
  for (std::size_t i = 0; i < support.size(); ++i)
    if (v[i] != 0) out.add_term(support[i], v[i]);
  return out;
}

bool same_span(int dim, const std::vector<AlgebraElement>& a,
               const std::vector<AlgebraElement>& b) {
  RowSpan sa(dim), sb(dim), sc(dim);
  for (const auto& x : a) { sa.add(to_coords(x, dim)); sc.add(to_coords(x, dim)); }
  for (const auto& x : b) { sb.add(to_coords(x, dim)); sc.add(to_coords(x, dim)); }
  return sa.rank() == sb.rank() && sb.rank() == sc.rank();
}

}  // namespace

std::vector<AlgebraElement> annihilator(const ParabolicData& pd, const Cochain& c) {
  if (c.is_zero())
    throw std::invalid_argument("annihilator: zero cochain annihilated by all of g_0");
  const ChevalleyAlgebra& g = *pd.alg;
  const std::vector<int> z = pd.g0_indices();

  std::vector<Cochain> acts;
  acts.reserve(z.size());
  for (int gi : z) acts.push_back(cochain_action(AlgebraElement::basis(gi), c));

  // Coordinates of the action cochains, indexed by (key, value basis index).
  std::map<std::pair<std::vector<int>, int>, std::size_t> rows;
  for (const auto& a : acts)
    for (const auto& [key, val] : a.entries())
      for (const auto& [gi, coef] : val.terms()) {
        (void)coef;
        rows.emplace(std::make_pair(key, gi), rows.size());
      }

  QMatrix M(rows.size(), z.size());
  for (std::size_t j = 0; j < acts.size(); ++j)
    for (const auto& [key, val] : acts[j].entries())
      for (const auto& [gi, coef] : val.terms())
        M.at(rows.at({key, gi}), j) = coef;

  std::vector<AlgebraElement> out;
  for (const auto& v : M.nullspace()) out.push_back(from_coords(v, z));
  return out;
}

std::vector<AlgebraElement> annihilator_closed_form(const ParabolicData& pd,
                                                    const HarmonicModule& m) {
  const ChevalleyAlgebra& g = *pd.alg;
  const RootSystem& rs = g.roots();
  const int rank = rs.rank();

  QMatrix mu_row(1, rank);
  for (int j = 1; j <= rank; ++j)
    mu_row.at(0, j - 1) = rs.pair_coroot(m.mu, rs.simple_root_index(j));

  std::vector<AlgebraElement> out;
  const auto kernel = mu_row.nullspace();
  if (kernel.size() != static_cast<std::size_t>(rank) - 1)
    throw std::logic_error("annihilator_closed_form: mu vanishes on the Cartan");
  for (const auto& v : kernel) {
    AlgebraElement h;
    for (int j = 0; j < rank; ++j)
      if (v[j] != 0) h.add_term(j, v[j]);
    out.push_back(h);
  }

  for (int gi : pd.g0_indices()) {
    if (gi < rank) continue;
    const Root& r = rs.root(gi - rank);
    long long s = 0;
    for (int i : m.J_mu) s += r[i - 1];
    if (s <= 0) out.push_back(AlgebraElement::basis(gi));
  }

  const auto direct = annihilator(pd, phi0_lowest_weight_vector(pd, m));
  if (!same_span(g.dim(), direct, out))
    throw std::logic_error(
        "annihilator_closed_form: disagrees with the direct nullspace computation");
  return out;
}

long long GradedSubalgebra::total_dim() const {
  long long t = 0;
  for (const auto& [d, v] : basis) {
    (void)d;
    t += static_cast<long long>(v.size());
  }
  return t;
}

std::map<int, long long> GradedSubalgebra::dims() const {
  std::map<int, long long> out;
  for (const auto& [d, v] : basis) out[d] = static_cast<long long>(v.size());
  return out;
}

GradedSubalgebra tanaka_prolong(const ParabolicData& pd,
                                const std::vector<AlgebraElement>& a0) {
  const ChevalleyAlgebra& g = *pd.alg;
  const int dim = g.dim();
  const int rank = g.rank();

  for (const auto& v : a0)
    for (const auto& [gi, coef] : v.terms()) {
      (void)coef;
      if (gi >= rank && pd.root_degree(gi - rank) != 0)
        throw std::invalid_argument("tanaka_prolong: generator not inside g_0");
    }

  RowSpan span0(dim);
  for (const auto& v : a0) span0.add(to_coords(v, dim));
  for (std::size_t i = 0; i < a0.size(); ++i)
    for (std::size_t j = i + 1; j < a0.size(); ++j)
      if (!span0.contains(to_coords(g.bracket(a0[i], a0[j]), dim)))
        throw std::invalid_argument("tanaka_prolong: a0 is not closed under bracket");

  GradedSubalgebra out;
  for (int d = -pd.depth; d <= -1; ++d)
    for (int gi : pd.basis_of_degree(d)) out.basis[d].push_back(AlgebraElement::basis(gi));

  std::vector<int> all;  // identity support for reduced row vectors
  for (int i = 0; i < dim; ++i) all.push_back(i);
  out.basis[0].clear();
  for (const auto& row : span0.basis()) out.basis[0].push_back(from_coords(row, all));

  const std::vector<int>& gm1 = pd.basis_of_degree(-1);
  RowSpan prev = span0;
  for (int k = 1; k <= pd.depth; ++k) {
    const std::vector<int>& gk = pd.basis_of_degree(k);
    const std::size_t nk = gk.size();
    // Column i lists the reductions of [e_i, u] mod a_{k-1}, u over g_{-1}.
    std::vector<std::vector<Rat>> cols(nk);
    for (std::size_t i = 0; i < nk; ++i) {
      cols[i].reserve(gm1.size() * dim);
      for (int u : gm1) {
        const auto red = prev.reduce(
            to_coords(g.bracket(AlgebraElement::basis(gk[i]), AlgebraElement::basis(u)), dim));
        cols[i].insert(cols[i].end(), red.begin(), red.end());
      }
    }
    QMatrix M(0, nk);
    std::vector<Rat> row(nk);
    for (std::size_t r = 0; r < gm1.size() * static_cast<std::size_t>(dim); ++r) {
      bool nonzero = false;
      for (std::size_t i = 0; i < nk; ++i) {
        row[i] = cols[i][r];
        if (row[i] != 0) nonzero = true;
      }
      if (nonzero) M.append_row(row);
    }
    std::vector<AlgebraElement> ak;
    RowSpan next(dim);
    for (const auto& v : M.nullspace()) {
      AlgebraElement x;
      for (std::size_t i = 0; i < nk; ++i)
        if (v[i] != 0) x.add_term(gk[i], v[i]);
      ak.push_back(x);
      next.add(to_coords(x, dim));
    }
    if (!ak.empty()) out.basis[k] = std::move(ak);
    prev = std::move(next);
  }
  return out;
}

AlgebraElement generic_kernel_element(const ParabolicData& pd, const Weight& mu) {
  const RootSystem& rs = pd.alg->roots();
  const int rank = rs.rank();

  QMatrix mu_row(1, rank);
  for (int j = 1; j <= rank; ++j)
    mu_row.at(0, j - 1) = rs.pair_coroot(mu, rs.simple_root_index(j));
  const auto kernel = mu_row.nullspace();
  if (kernel.empty())
    throw std::logic_error("generic_kernel_element: ker(mu) is trivial");
  const int d = static_cast<int>(kernel.size());

  // Integer generators of ker(mu): clear denominators columnwise.
  std::vector<std::vector<long long>> K(d, std::vector<long long>(rank));
  for (int i = 0; i < d; ++i) {
    Int l(1);
    for (const Rat& x : kernel[i]) l = lcm(l, Int(denominator(x)));
    for (int j = 0; j < rank; ++j)
      K[i][j] = to_ll(kernel[i][j] * Rat(l));
  }

  // Distinct functionals alpha + beta evaluated on the Cartan basis.
  std::set<std::vector<long long>> fset;
  const int np = rs.num_pos();
  for (int a = 0; a < np; ++a)
    for (int b = -1; b < np; ++b) {
      Weight f = to_weight(rs.root(a));
      if (b >= 0) {
        const Root& rb = rs.root(b);
        for (int j = 0; j < rank; ++j) f[j] += rb[j];
      }
      std::vector<long long> fh(rank);
      for (int j = 1; j <= rank; ++j)
        fh[j - 1] = to_ll(rs.pair_coroot(f, rs.simple_root_index(j)));
      fset.insert(std::move(fh));
    }

  // f applied to the kernel generators; a row of zeros means f vanishes on
  // all of ker(mu) and no witness exists.
  std::vector<std::vector<long long>> fk;
  for (const auto& fh : fset) {
    std::vector<long long> row(d, 0);
    bool nonzero = false;
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < rank; ++j) row[i] += fh[j] * K[i][j];
      if (row[i] != 0) nonzero = true;
    }
    if (!nonzero)
      throw std::logic_error(
          "generic_kernel_element: some alpha+beta vanishes on ker(mu)");
    fk.push_back(std::move(row));
  }

  // Moment curve H(t) = sum_i t^i K_i: each functional restricts to a nonzero
  // polynomial in t of degree < d, so it has fewer than d positive roots and
  // the first good integer t is at most |fk|*(d-1)+1.
  std::vector<Int> c(d);
  for (long long t = 1;; ++t) {
    Int p(1);
    for (int i = 0; i < d; ++i) {
      c[i] = p;
      p *= t;
    }
    bool ok = true;
    for (const auto& row : fk) {
      Int s(0);
      for (int i = 0; i < d; ++i) s += row[i] * c[i];
      if (s == 0) { ok = false; break; }
    }
    if (ok) break;
  }
  AlgebraElement h;
  for (int j = 0; j < rank; ++j) {
    Int v(0);
    for (int i = 0; i < d; ++i) v += c[i] * K[i][j];
    if (v != 0) h.add_term(j, Rat(v));
  }
  return h;
}

UpperBounds upper_bounds(const ParabolicData& pd) {
  UpperBounds out;
  for (const auto& m : harmonic_modules(pd)) {
    if (!m.regular) continue;
    ModuleBound b;
    b.module = m;
    const auto a0 = annihilator_closed_form(pd, m);
    b.a0_dim = static_cast<long long>(a0.size());
    const GradedSubalgebra a = tanaka_prolong(pd, a0);
    for (int k = 1; k <= pd.depth; ++k) {
      auto it = a.basis.find(k);
      b.prolongation_dims[k] = it == a.basis.end() ? 0 : static_cast<long long>(it->second.size());
    }
    b.U_mu = a.total_dim();
    out.per_module.push_back(std::move(b));
  }
  out.defined = !out.per_module.empty();
  if (out.defined) {
    out.U = out.per_module.front().U_mu;
    for (const auto& b : out.per_module) out.U = std::max(out.U, b.U_mu);
  }
  return out;
}

}  // namespace symgap
