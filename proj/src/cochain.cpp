#include "symgap/cochain.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace symgap {

namespace {

// Sorts key in place and returns the permutation sign; 0 on duplicates.
int sort_sign(std::vector<int>& key) {
  int sign = 1;
  for (std::size_t i = 1; i < key.size(); ++i)
    for (std::size_t j = i; j > 0 && key[j - 1] >= key[j]; --j) {
      if (key[j - 1] == key[j]) return 0;
      std::swap(key[j - 1], key[j]);
      sign = -sign;
    }
  return sign;
}

std::vector<int> erase_at(const std::vector<int>& key, std::size_t pos) {
  std::vector<int> out = key;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
  return out;
}

}  // namespace

Cochain::Cochain(const ParabolicData& pd, int arity) : pd_(&pd), arity_(arity) {
  if (arity < 0 || arity > 3) throw std::invalid_argument("cochain arity must be 0..3");
}

void Cochain::check_key(const std::vector<int>& key) const {
  if (static_cast<int>(key.size()) != arity_) throw std::invalid_argument("key arity mismatch");
  for (int b : key) {
    if (b < 0 || b >= pd_->alg->roots().num_roots() || pd_->root_degree(b) >= 0)
      throw std::invalid_argument("cochain key must consist of negative-degree roots");
  }
}

void Cochain::add(const std::vector<int>& key, const AlgebraElement& v) {
  check_key(key);
  if (v.is_zero()) return;
  std::vector<int> k = key;
  const int sign = sort_sign(k);
  if (sign == 0) return;
  AlgebraElement& slot = data_[k];
  if (sign > 0) {
    slot += v;
  } else {
    slot -= v;
  }
  if (slot.is_zero()) data_.erase(k);
}

AlgebraElement Cochain::value(const std::vector<int>& key) const {
  check_key(key);
  std::vector<int> k = key;
  const int sign = sort_sign(k);
  if (sign == 0) return {};
  const auto it = data_.find(k);
  if (it == data_.end()) return {};
  AlgebraElement out = it->second;
  if (sign < 0) out *= Rat(-1);
  return out;
}

Cochain& Cochain::operator+=(const Cochain& o) {
  if (arity_ != o.arity_ || pd_ != o.pd_) throw std::invalid_argument("cochain shape mismatch");
  for (const auto& [k, v] : o.data_) add(k, v);
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  if (arity_ != o.arity_ || pd_ != o.pd_) throw std::invalid_argument("cochain shape mismatch");
  for (const auto& [k, v] : o.data_) {
    AlgebraElement neg = v;
    neg *= Rat(-1);
    add(k, neg);
  }
  return *this;
}

Cochain& Cochain::operator*=(const Rat& c) {
  if (c == 0) {
    data_.clear();
    return *this;
  }
  for (auto& [k, v] : data_) v *= c;
  return *this;
}

bool Cochain::operator==(const Cochain& o) const {
  return arity_ == o.arity_ && pd_ == o.pd_ && data_ == o.data_;
}

Weight Cochain::weight() const {
  if (data_.empty()) throw std::invalid_argument("weight of the zero cochain is undefined");
  const ChevalleyAlgebra& g = *pd_->alg;
  const RootSystem& rs = g.roots();
  bool have = false;
  Weight w;
  for (const auto& [key, v] : data_) {
    Weight base(rs.rank(), Rat(0));
    for (int b : key) {
      const Root& r = rs.root(b);
      for (int i = 0; i < rs.rank(); ++i) base[i] -= r[i];
    }
    for (const auto& [gidx, c] : v.terms()) {
      Weight cur = base;
      if (!g.is_cartan(gidx)) {
        const Root& r = rs.root(g.root_of(gidx));
        for (int i = 0; i < rs.rank(); ++i) cur[i] += r[i];
      }
      if (!have) {
        w = cur;
        have = true;
      } else if (w != cur) {
        throw std::invalid_argument("cochain mixes h-weights");
      }
    }
  }
  return w;
}

Cochain del(const Cochain& c) {
  if (c.arity() > 2) throw std::invalid_argument("del is only defined up to 2-cochains");
  const ParabolicData& pd = c.parabolic();
  const ChevalleyAlgebra& g = *pd.alg;
  const RootSystem& rs = g.roots();
  const std::vector<int> gm = [&] {
    std::vector<int> out;
    for (const auto& [deg, idxs] : pd.graded_basis)
      if (deg < 0)
        for (int gidx : idxs) out.push_back(g.root_of(gidx));
    std::sort(out.begin(), out.end());
    return out;
  }();

  // Pairs of g_- roots by their (g_-) sum, for un-contracting keys.
  std::map<int, std::vector<std::pair<int, int>>> pairs_by_sum;
  for (std::size_t i = 0; i < gm.size(); ++i)
    for (std::size_t j = i + 1; j < gm.size(); ++j) {
      Root s = rs.root(gm[i]);
      const Root& t = rs.root(gm[j]);
      for (int k = 0; k < rs.rank(); ++k) s[k] += t[k];
      if (const auto idx = rs.root_index(s)) pairs_by_sum[*idx].push_back({gm[i], gm[j]});
    }

  std::set<std::vector<int>> candidates;
  for (const auto& [key, v] : c.entries()) {
    for (int b : gm) {
      if (std::find(key.begin(), key.end(), b) != key.end()) continue;
      std::vector<int> k = key;
      k.push_back(b);
      std::sort(k.begin(), k.end());
      candidates.insert(k);
    }
    for (std::size_t t = 0; t < key.size(); ++t) {
      const auto it = pairs_by_sum.find(key[t]);
      if (it == pairs_by_sum.end()) continue;
      const std::vector<int> rest = erase_at(key, t);
      for (const auto& [u, w] : it->second) {
        if (std::find(rest.begin(), rest.end(), u) != rest.end()) continue;
        if (std::find(rest.begin(), rest.end(), w) != rest.end()) continue;
        std::vector<int> k = rest;
        k.push_back(u);
        k.push_back(w);
        std::sort(k.begin(), k.end());
        candidates.insert(k);
      }
    }
  }

  Cochain out(pd, c.arity() + 1);
  for (const auto& key : candidates) {
    AlgebraElement val;
    const int n = static_cast<int>(key.size());
    for (int i = 0; i < n; ++i) {
      AlgebraElement term =
          g.bracket(AlgebraElement::basis(g.e_index(key[i])), c.value(erase_at(key, i)));
      if (i % 2 != 0) term *= Rat(-1);
      val += term;
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const long long nij = g.structure_constant(key[i], key[j]);
        if (nij == 0) continue;
        Root s = rs.root(key[i]);
        const Root& t = rs.root(key[j]);
        for (int k = 0; k < rs.rank(); ++k) s[k] += t[k];
        std::vector<int> inner = erase_at(erase_at(key, j), i);
        inner.insert(inner.begin(), *rs.root_index(s));
        AlgebraElement term = c.value(inner);
        term *= Rat(((i + j) % 2 == 0) ? nij : -nij);
        val += term;
      }
    }
    out.add(key, val);
  }
  return out;
}

Cochain delstar(const Cochain& c) {
  if (c.arity() < 1) throw std::invalid_argument("delstar is only defined on 1..3-cochains");
  const ParabolicData& pd = c.parabolic();
  const ChevalleyAlgebra& g = *pd.alg;
  const RootSystem& rs = g.roots();

  Cochain out(pd, c.arity() - 1);
  for (const auto& [key, v] : c.entries()) {
    const int n = static_cast<int>(key.size());
    for (int i = 0; i < n; ++i) {
      AlgebraElement term = g.bracket(AlgebraElement::basis(g.e_index(rs.neg(key[i]))), v);
      Rat f = Rat(1) / g.killing_ee(key[i]);
      if (i % 2 != 0) f = -f;
      term *= f;
      out.add(erase_at(key, i), term);
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const int ai = rs.neg(key[i]), aj = rs.neg(key[j]);
        const long long nij = g.structure_constant(ai, aj);
        if (nij == 0) continue;
        Root s = rs.root(ai);
        const Root& t = rs.root(aj);
        for (int k = 0; k < rs.rank(); ++k) s[k] += t[k];
        const int sidx = *rs.root_index(s);
        std::vector<int> k2 = erase_at(erase_at(key, static_cast<std::size_t>(j)),
                                       static_cast<std::size_t>(i));
        k2.insert(k2.begin(), rs.neg(sidx));
        AlgebraElement term = v;
        // Signs (-1)^{i+1} above and (-1)^{i+j+1} here (1-based) make
        // delstar^2 = 0 and del/delstar exactly adjoint.
        Rat f = Rat(nij) * g.killing_ee(sidx) / (g.killing_ee(key[i]) * g.killing_ee(key[j]));
        if ((i + j) % 2 == 0) f = -f;  // (i+1)+(j+1)+1 odd <=> i+j even
        term *= f;
        out.add(k2, term);
      }
    }
  }
  return out;
}

Cochain box(const Cochain& c) {
  if (c.arity() != 2) throw std::invalid_argument("box is defined on 2-cochains");
  return del(delstar(c)) + delstar(del(c));
}

Rat cochain_pairing(const Cochain& a, const Cochain& b) {
  if (a.arity() != b.arity() || &a.parabolic() != &b.parabolic())
    throw std::invalid_argument("cochain shape mismatch");
  const ChevalleyAlgebra& g = *a.parabolic().alg;
  Rat out(0);
  for (const auto& [key, va] : a.entries()) {
    const auto it = b.entries().find(key);
    if (it == b.entries().end()) continue;
    Rat w(1);
    for (int bidx : key) w /= g.killing_ee(bidx);
    out += w * g.theta_pairing(va, it->second);
  }
  return out;
}

namespace {

// Component of x lying in g_-: drops Cartan terms and nonnegative degrees.
AlgebraElement project_minus(const ParabolicData& pd, const AlgebraElement& x) {
  AlgebraElement out;
  for (const auto& [gidx, c] : x.terms())
    if (!pd.alg->is_cartan(gidx) && pd.root_degree(pd.alg->root_of(gidx)) < 0)
      out.add_term(gidx, c);
  return out;
}

}  // namespace

Cochain cochain_action(const AlgebraElement& z, const Cochain& c) {
  const ParabolicData& pd = c.parabolic();
  const ChevalleyAlgebra& g = *pd.alg;
  const std::vector<int> gm = [&] {
    std::vector<int> out;
    for (int gidx : pd.g_minus_indices()) out.push_back(g.root_of(gidx));
    std::sort(out.begin(), out.end());
    return out;
  }();

  std::set<std::vector<int>> candidates;
  for (const auto& [key, v] : c.entries()) {
    candidates.insert(key);
    for (std::size_t t = 0; t < key.size(); ++t) {
      const std::vector<int> rest = erase_at(key, t);
      for (int b : gm) {
        if (std::find(rest.begin(), rest.end(), b) != rest.end()) continue;
        std::vector<int> k = rest;
        k.push_back(b);
        std::sort(k.begin(), k.end());
        candidates.insert(k);
      }
    }
  }

  Cochain out(pd, c.arity());
  for (const auto& key : candidates) {
    AlgebraElement val = g.bracket(z, c.value(key));
    for (std::size_t t = 0; t < key.size(); ++t) {
      const AlgebraElement br =
          project_minus(pd, g.bracket(z, AlgebraElement::basis(g.e_index(key[t]))));
      for (const auto& [gidx, coeff] : br.terms()) {
        std::vector<int> k = key;
        k[t] = g.root_of(gidx);
        AlgebraElement term = c.value(k);
        term *= -coeff;
        val += term;
      }
    }
    out.add(key, val);
  }
  return out;
}

AlgebraElement evaluate2(const Cochain& c, const AlgebraElement& x, const AlgebraElement& y) {
  if (c.arity() != 2) throw std::invalid_argument("evaluate2 needs a 2-cochain");
  const ParabolicData& pd = c.parabolic();
  const ChevalleyAlgebra& g = *pd.alg;
  const AlgebraElement xm = project_minus(pd, x), ym = project_minus(pd, y);
  AlgebraElement out;
  for (const auto& [gx, cx] : xm.terms()) {
    for (const auto& [gy, cy] : ym.terms()) {
      AlgebraElement term = c.value({g.root_of(gx), g.root_of(gy)});
      term *= cx * cy;
      out += term;
    }
  }
  return out;
}

std::map<int, Cochain> degree_split(const Cochain& c) {
  const ParabolicData& pd = c.parabolic();
  const ChevalleyAlgebra& g = *pd.alg;
  std::map<int, Cochain> out;
  for (const auto& [key, v] : c.entries()) {
    int base = 0;
    for (int b : key) base -= pd.root_degree(b);
    for (const auto& [gidx, coeff] : v.terms()) {
      const int d = base + (g.is_cartan(gidx) ? 0 : pd.root_degree(g.root_of(gidx)));
      auto it = out.find(d);
      if (it == out.end()) it = out.emplace(d, Cochain(pd, c.arity())).first;
      it->second.add(key, AlgebraElement::basis(gidx, coeff));
    }
  }
  return out;
}

RegularityNormality regularity_normality(const Cochain& c) {
  if (c.arity() != 2) throw std::invalid_argument("regularity check is for 2-cochains");
  RegularityNormality rn;
  for (const auto& [d, comp] : degree_split(c)) rn.degrees.push_back(d);
  rn.regular = std::all_of(rn.degrees.begin(), rn.degrees.end(), [](int d) { return d >= 1; });
  rn.normal = delstar(c).is_zero();
  return rn;
}

}  // namespace symgap
