#include "symgap/chevalley.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace symgap {

AlgebraElement AlgebraElement::basis(int global_index, Rat coeff) {
  AlgebraElement x;
  if (coeff != 0) x.terms_.emplace_back(global_index, std::move(coeff));
  return x;
}

Rat AlgebraElement::coeff(int global_index) const {
  for (const auto& [i, c] : terms_)
    if (i == global_index) return c;
  return Rat(0);
}

void AlgebraElement::add_term(int global_index, const Rat& c) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), global_index,
                             [](const auto& t, int i) { return t.first < i; });
  if (it != terms_.end() && it->first == global_index) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {global_index, c});
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [i, c] : o.terms_) add_term(i, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [i, c] : o.terms_) add_term(i, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rat& c) {
  if (c == 0) { terms_.clear(); return *this; }
  for (auto& [i, v] : terms_) v *= c;
  return *this;
}

BasisElement ChevalleyAlgebra::basis_element(int gidx) const {
  if (is_cartan(gidx)) return BasisElement::cartan(gidx + 1);
  return BasisElement::root_vector(root_of(gidx));
}

ChevalleyAlgebra::ChevalleyAlgebra(const RootSystem& rs) : rs_(rs) {
  build_structure_constants();
  verify_jacobi();
}

void ChevalleyAlgebra::build_structure_constants() {
  const int m = rs_.num_pos();
  const int nr = rs_.num_roots();
  const int l = rs_.rank();

  lsq_.resize(nr);
  coroot_.resize(nr);
  cartan_eig_.assign(nr, std::vector<long long>(l, 0));
  for (int idx = 0; idx < nr; ++idx) {
    lsq_[idx] = rs_.length_sq(idx);
    const Root& r = rs_.root(idx);
    coroot_[idx].resize(l);
    for (int i = 0; i < l; ++i) {
      // alpha^v = sum a_i (d_i / d_alpha) alpha_i^v, always integral.
      const Rat di = lsq_[rs_.simple_root_index(i + 1)] / 2;
      coroot_[idx][i] = to_ll(Rat(r[i]) * di / (lsq_[idx] / 2));
      long long eig = 0;
      for (int k = 0; k < l; ++k) eig += static_cast<long long>(r[k]) * rs_.cartan()[k][i];
      cartan_eig_[idx][i] = eig;
    }
  }

  sum_idx_.assign(nr, std::vector<int>(nr, -1));
  for (int a = 0; a < nr; ++a) {
    for (int b = 0; b < nr; ++b) {
      if (b == rs_.neg(a)) continue;
      Root s = rs_.root(a);
      const Root& rb = rs_.root(b);
      for (int i = 0; i < l; ++i) s[i] += rb[i];
      if (auto ix = rs_.root_index(s)) sum_idx_[a][b] = *ix;
    }
  }

  // Positive-pair constants by increasing height of the sum.  The pair with
  // the smallest first component (extraspecial) gets +(p+1); the rest follow
  // from the four-root Jacobi identity against the extraspecial pair.
  n_pos_.assign(m, std::vector<long long>(m, 0));
  for (int g = 0; g < m; ++g) {
    if (rs_.height(g) < 2) continue;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < m; ++a) {
      const int b = sum_idx_[g][rs_.neg(a)];
      if (b >= 0 && b < m && a < b) pairs.emplace_back(a, b);
    }
    if (pairs.empty()) throw std::logic_error("no special pair for a composite root");
    const auto [a1, b1] = pairs.front();
    n_pos_[a1][b1] = rs_.string_p(a1, b1) + 1;
    n_pos_[b1][a1] = -n_pos_[a1][b1];
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto [a, b] = pairs[k];
      long long t1 = get_n(rs_.neg(a1), a);
      if (t1 != 0) t1 *= get_n(sum_idx_[rs_.neg(a1)][a], b);
      long long t3 = get_n(b, rs_.neg(a1));
      if (t3 != 0) t3 *= get_n(sum_idx_[b][rs_.neg(a1)], a);
      const long long d = get_n(g, rs_.neg(a1));
      if (d == 0 || (t1 + t3) % d != 0)
        throw std::logic_error("structure constant propagation failed");
      n_pos_[a][b] = -(t1 + t3) / d;
      n_pos_[b][a] = -n_pos_[a][b];
    }
  }

  n_full_.assign(nr, std::vector<long long>(nr, 0));
  for (int a = 0; a < nr; ++a)
    for (int b = 0; b < nr; ++b)
      if (sum_idx_[a][b] >= 0) n_full_[a][b] = get_n(a, b);

  // Killing tables via honest adjoint traces.
  killing_h_.assign(l, std::vector<Rat>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j)
      killing_h_[i - 1][j - 1] =
          trace_form(AlgebraElement::basis(h_index(i)), AlgebraElement::basis(h_index(j)));
  q_.resize(nr);
  for (int a = 0; a < nr; ++a)
    q_[a] = trace_form(AlgebraElement::basis(e_index(a)),
                       AlgebraElement::basis(e_index(rs_.neg(a))));
}

long long ChevalleyAlgebra::get_n(int a, int b) const {
  const int s = sum_idx_[a][b];
  if (s < 0) return 0;
  const int m = rs_.num_pos();
  const bool an = a >= m, bn = b >= m;
  if (!an && !bn) return n_pos_[a][b];
  if (an && bn) return -get_n(rs_.neg(a), rs_.neg(b));
  if (an) return -get_n(b, a);
  // a positive, b negative.
  if (s < m) {
    // Closed-sum identity: N_{a,b} = -((s,s)/(a,a)) N_{-b,s}.
    const Rat v = -lsq_[s] / lsq_[a] * Rat(n_pos_[rs_.neg(b)][s]);
    return to_ll(v);
  }
  return -get_n(rs_.neg(a), rs_.neg(b));
}

long long ChevalleyAlgebra::structure_constant(int a, int b) const {
  return n_full_[a][b];
}

std::vector<ChevalleyAlgebra::Term> ChevalleyAlgebra::basis_bracket(int gi, int gj) const {
  std::vector<Term> out;
  const int l = rank();
  const bool ci = is_cartan(gi), cj = is_cartan(gj);
  if (ci && cj) return out;
  if (ci || cj) {
    const int node = (ci ? gi : gj) + 1;
    const int ridx = root_of(ci ? gj : gi);
    const long long eig = cartan_eig_[ridx][node - 1];
    if (eig != 0) out.emplace_back(e_index(ridx), ci ? eig : -eig);
    return out;
  }
  const int a = root_of(gi), b = root_of(gj);
  if (b == rs_.neg(a)) {
    for (int k = 0; k < l; ++k)
      if (coroot_[a][k] != 0) out.emplace_back(k, coroot_[a][k]);
    return out;
  }
  const int s = sum_idx_[a][b];
  if (s >= 0 && n_full_[a][b] != 0) out.emplace_back(e_index(s), n_full_[a][b]);
  return out;
}

AlgebraElement ChevalleyAlgebra::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement out;
  for (const auto& [gi, ci] : x.terms()) {
    for (const auto& [gj, cj] : y.terms()) {
      const Rat c = ci * cj;
      for (const auto& [gk, n] : basis_bracket(gi, gj)) out.add_term(gk, c * n);
    }
  }
  return out;
}

Rat ChevalleyAlgebra::killing(const AlgebraElement& x, const AlgebraElement& y) const {
  Rat s = 0;
  for (const auto& [gi, ci] : x.terms()) {
    for (const auto& [gj, cj] : y.terms()) {
      if (is_cartan(gi) && is_cartan(gj)) {
        s += ci * cj * killing_h_[gi][gj];
      } else if (!is_cartan(gi) && !is_cartan(gj)) {
        const int a = root_of(gi);
        if (root_of(gj) == rs_.neg(a)) s += ci * cj * q_[a];
      }
    }
  }
  return s;
}

AlgebraElement ChevalleyAlgebra::dual_root_vector(int root_idx) const {
  return AlgebraElement::basis(e_index(root_idx), Rat(1) / q_[root_idx]);
}

AlgebraElement ChevalleyAlgebra::theta(const AlgebraElement& x) const {
  AlgebraElement out;
  for (const auto& [gi, c] : x.terms()) {
    if (is_cartan(gi)) out.add_term(gi, -c);
    else out.add_term(e_index(rs_.neg(root_of(gi))), -c);
  }
  return out;
}

Rat ChevalleyAlgebra::theta_pairing(const AlgebraElement& x, const AlgebraElement& y) const {
  return -killing(x, theta(y));
}

Weight ChevalleyAlgebra::weight_of(const AlgebraElement& x) const {
  if (x.is_zero()) throw std::invalid_argument("weight_of: zero element");
  bool have = false;
  Weight w(rank(), Rat(0));
  for (const auto& [gi, c] : x.terms()) {
    Weight wt(rank(), Rat(0));
    if (!is_cartan(gi)) wt = to_weight(rs_.root(root_of(gi)));
    if (!have) { w = wt; have = true; }
    else if (w != wt) throw std::invalid_argument("weight_of: mixed weights");
  }
  return w;
}

Rat ChevalleyAlgebra::trace_form(const AlgebraElement& x, const AlgebraElement& y) const {
  Rat tr = 0;
  for (int z = 0; z < dim(); ++z) {
    const AlgebraElement img = bracket(x, bracket(y, AlgebraElement::basis(z)));
    tr += img.coeff(z);
  }
  return tr;
}

void ChevalleyAlgebra::verify_jacobi() const {
  const int n = dim();
  std::vector<std::vector<Term>> cache(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cache[static_cast<std::size_t>(i) * n + j] = basis_bracket(i, j);
  std::vector<long long> acc(n, 0);
  std::vector<int> touched;
  touched.reserve(32);
  auto add_nested = [&](int x, const std::vector<Term>& inner) {
    for (const auto& [k, c] : inner) {
      for (const auto& [t, d] : cache[static_cast<std::size_t>(x) * n + k]) {
        if (acc[t] == 0) touched.push_back(t);
        acc[t] += c * d;
      }
    }
  };
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const auto& xy = cache[static_cast<std::size_t>(x) * n + y];
      for (int z = y + 1; z < n; ++z) {
        add_nested(x, cache[static_cast<std::size_t>(y) * n + z]);
        add_nested(y, cache[static_cast<std::size_t>(z) * n + x]);
        add_nested(z, xy);
        for (int t : touched)
          if (acc[t] != 0) throw std::logic_error("Jacobi identity violated on basis triple");
        for (int t : touched) acc[t] = 0;
        touched.clear();
      }
    }
  }
}

std::string ChevalleyAlgebra::describe(const AlgebraElement& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [gidx, c] : x.terms()) {
    std::string name;
    if (is_cartan(gidx)) {
      name = "h" + std::to_string(gidx + 1);
    } else {
      const Root& r = rs_.root(root_of(gidx));
      name = "e(";
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) name += ",";
        name += std::to_string(r[i]);
      }
      name += ")";
    }
    const bool neg = c < 0;
    const Rat mag = neg ? Rat(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1) out += rat_str(mag) + "*";
    out += name;
  }
  return out;
}

}  // namespace symgap
