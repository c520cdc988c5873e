#include "symgap/parabolic.hpp"

#include "symgap/linalg.hpp"

#include <algorithm>

namespace symgap {

bool ParabolicData::is_crossed(int j) const {
  return std::binary_search(crossed.begin(), crossed.end(), j);
}

int ParabolicData::root_degree(int root_idx) const {
  const Root& r = alg->roots().root(root_idx);
  int deg = 0;
  for (int j : crossed) deg += r[j - 1];
  return deg;
}

Rat ParabolicData::weight_degree(const Weight& x) const {
  Rat deg(0);
  for (int j : crossed) deg += x[j - 1];
  return deg;
}

const std::vector<int>& ParabolicData::basis_of_degree(int i) const {
  static const std::vector<int> empty;
  const auto it = graded_basis.find(i);
  return it == graded_basis.end() ? empty : it->second;
}

int ParabolicData::dim_of_degree(int i) const {
  return static_cast<int>(basis_of_degree(i).size());
}

namespace {

std::vector<int> collect(const ParabolicData& pd, bool lo, bool zero, bool hi) {
  std::vector<int> out;
  for (const auto& [deg, idxs] : pd.graded_basis) {
    if ((deg < 0 && lo) || (deg == 0 && zero) || (deg > 0 && hi))
      out.insert(out.end(), idxs.begin(), idxs.end());
  }
  return out;
}

}  // namespace

std::vector<int> ParabolicData::p_plus_indices() const { return collect(*this, false, false, true); }
std::vector<int> ParabolicData::g0_indices() const { return collect(*this, false, true, false); }
std::vector<int> ParabolicData::g_minus_indices() const { return collect(*this, true, false, false); }

ParabolicData build_parabolic(const ChevalleyAlgebra& alg, const std::vector<int>& crossed) {
  const RootSystem& rs = alg.roots();
  const int l = rs.rank();

  ParabolicData pd;
  pd.alg = &alg;
  pd.crossed = crossed;
  std::sort(pd.crossed.begin(), pd.crossed.end());
  pd.crossed.erase(std::unique(pd.crossed.begin(), pd.crossed.end()), pd.crossed.end());
  if (pd.crossed.empty()) throw std::invalid_argument("crossed node set must be nonempty");
  if (pd.crossed.front() < 1 || pd.crossed.back() > l)
    throw std::invalid_argument("crossed node out of range");

  // Z solves alpha_j(Z) = [j crossed]: with Z = sum x_k h_k this is
  // sum_k c_{jk} x_k = [j crossed].
  QMatrix sys(l, l + 1);
  for (int j = 1; j <= l; ++j) {
    for (int k = 1; k <= l; ++k) sys.at(j - 1, k - 1) = Rat(rs.c(j, k));
    sys.at(j - 1, l) = pd.is_crossed(j) ? Rat(1) : Rat(0);
  }
  sys.rref();
  for (int k = 0; k < l; ++k) pd.Z.add_term(alg.h_index(k + 1), sys.at(k, l));

  for (int j = 1; j <= l; ++j) pd.graded_basis[0].push_back(alg.h_index(j));
  for (int idx = 0; idx < rs.num_roots(); ++idx)
    pd.graded_basis[pd.root_degree(idx)].push_back(alg.e_index(idx));
  for (auto& [deg, idxs] : pd.graded_basis) std::sort(idxs.begin(), idxs.end());

  pd.depth = 0;
  for (int j : pd.crossed) pd.depth += rs.highest_root()[j - 1];
  return pd;
}

DegreeResult degree(const ParabolicData& pd, const AlgebraElement& x) {
  if (x.is_zero()) throw std::invalid_argument("degree of the zero element is undefined");
  DegreeResult res;
  for (const auto& [gidx, c] : x.terms()) {
    const int d = pd.alg->is_cartan(gidx) ? 0 : pd.root_degree(pd.alg->root_of(gidx));
    if (std::find(res.degrees.begin(), res.degrees.end(), d) == res.degrees.end())
      res.degrees.push_back(d);
  }
  std::sort(res.degrees.begin(), res.degrees.end());
  res.homogeneous = res.degrees.size() == 1;
  if (res.homogeneous) res.degree = res.degrees.front();
  return res;
}

AlgebraElement leading_part(const ParabolicData& pd, const AlgebraElement& x, int i) {
  AlgebraElement out;
  for (const auto& [gidx, c] : x.terms()) {
    const int d = pd.alg->is_cartan(gidx) ? 0 : pd.root_degree(pd.alg->root_of(gidx));
    if (d < i) throw std::invalid_argument("element does not lie in the stated filtration piece");
    if (d == i) out.add_term(gidx, c);
  }
  return out;
}

}  // namespace symgap
