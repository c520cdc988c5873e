#include "symgap/rootsystem.hpp"

#include "symgap/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace symgap {

SimpleType SimpleType::parse(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("algebra name too short: " + name);
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  if (f < 'A' || f > 'G' || f == 'X')
    throw std::invalid_argument("unknown family in algebra name: " + name);
  int rank = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      throw std::invalid_argument("bad rank in algebra name: " + name);
    rank = rank * 10 + (name[i] - '0');
  }
  SimpleType t{static_cast<Family>(f), rank};
  const bool ok = (f == 'A' && rank >= 1) || (f == 'B' && rank >= 2) ||
                  (f == 'C' && rank >= 2) || (f == 'D' && rank >= 4) ||
                  (f == 'E' && rank >= 6 && rank <= 8) || (f == 'F' && rank == 4) ||
                  (f == 'G' && rank == 2);
  if (!ok) throw std::invalid_argument("rank out of range for family: " + name);
  return t;
}

std::string SimpleType::str() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

Weight to_weight(const Root& r) {
  Weight w(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) w[i] = r[i];
  return w;
}

namespace {

std::vector<std::vector<int>> build_cartan(SimpleType t) {
  const int l = t.rank;
  std::vector<std::vector<int>> c(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) c[i][i] = 2;
  auto edge = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < l; ++i) edge(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < l; ++i) edge(i, i + 1);
      c[l - 2][l - 1] = -2;  // alpha_l short
      break;
    case Family::C:
      for (int i = 0; i + 1 < l; ++i) edge(i, i + 1);
      c[l - 1][l - 2] = -2;  // alpha_l long
      break;
    case Family::D:
      for (int i = 0; i + 1 < l - 1; ++i) edge(i, i + 1);
      edge(l - 3, l - 1);
      break;
    case Family::E:
      edge(0, 2);
      for (int i = 2; i + 1 < l; ++i) edge(i, i + 1);
      edge(1, 3);
      break;
    case Family::F:
      edge(0, 1); edge(1, 2); edge(2, 3);
      c[1][2] = -2;  // alpha_3, alpha_4 short
      break;
    case Family::G:
      c[0][1] = -1;
      c[1][0] = -3;  // alpha_1 short, alpha_2 long
      break;
  }
  return c;
}

std::vector<Rat> build_d(SimpleType t) {
  const int l = t.rank;
  std::vector<Rat> d(l, Rat(1));
  switch (t.family) {
    case Family::B: d[l - 1] = Rat(1) / 2; break;
    case Family::C: for (int i = 0; i + 1 < l; ++i) d[i] = Rat(1) / 2; break;
    case Family::F: d[2] = Rat(1) / 2; d[3] = Rat(1) / 2; break;
    case Family::G: d[0] = Rat(1) / 3; break;
    default: break;
  }
  return d;
}

}  // namespace

RootSystem::RootSystem(SimpleType t)
    : type_(t), rank_(t.rank), cartan_(build_cartan(t)), d_(build_d(t)) {
  // Enumerate positive roots by height using the root-string rule:
  // beta + alpha_j is a root iff p - <beta, alpha_j^v> > 0, with p the
  // length of the descending string.
  std::vector<Root> frontier;
  for (int j = 0; j < rank_; ++j) {
    Root a(rank_, 0);
    a[j] = 1;
    frontier.push_back(a);
  }
  std::map<Root, bool> seen;
  for (const Root& a : frontier) seen[a] = true;
  std::vector<Root> all = frontier;
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& b : frontier) {
      for (int j = 0; j < rank_; ++j) {
        long long pairing = 0;
        for (int i = 0; i < rank_; ++i) pairing += static_cast<long long>(b[i]) * cartan_[i][j];
        int p = 0;
        Root down = b;
        for (;;) {
          down[j] -= 1;
          bool nonneg = true, nonzero = false;
          for (int x : down) { if (x < 0) nonneg = false; if (x != 0) nonzero = true; }
          if (!nonneg || !nonzero || !seen.count(down)) break;
          ++p;
        }
        if (p - pairing <= 0) continue;
        Root up = b;
        up[j] += 1;
        if (seen.emplace(up, true).second) {
          next.push_back(up);
          all.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  auto ht = [](const Root& r) {
    int h = 0;
    for (int x : r) h += x;
    return h;
  };
  std::sort(all.begin(), all.end(), [&](const Root& a, const Root& b) {
    const int ha = ht(a), hb = ht(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  pos_ = std::move(all);
  for (int i = 0; i < static_cast<int>(pos_.size()); ++i) index_[pos_[i]] = i;
  roots_ = pos_;
  for (const Root& r : pos_) {
    Root m = r;
    for (int& x : m) x = -x;
    roots_.push_back(std::move(m));
  }

  // Invert the transposed Cartan matrix once for fw -> simple conversion.
  QMatrix m(rank_, 2 * rank_);
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) m.at(i, j) = cartan_[j][i];
    m.at(i, rank_ + i) = 1;
  }
  m.rref();
  fw_to_simple_.assign(rank_, std::vector<Rat>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) fw_to_simple_[i][j] = m.at(i, rank_ + j);
}

const Root& RootSystem::root(int idx) const { return roots_[idx]; }

std::optional<int> RootSystem::root_index(const Root& r) const {
  auto it = index_.find(r);
  if (it != index_.end()) return it->second;
  Root m = r;
  for (int& x : m) x = -x;
  it = index_.find(m);
  if (it != index_.end()) return it->second + num_pos();
  return std::nullopt;
}

int RootSystem::simple_root_index(int j) const {
  Root a(rank_, 0);
  a[j - 1] = 1;
  return index_.at(a);
}

int RootSystem::height(int idx) const {
  const Root& r = root(idx);
  int h = 0;
  for (int x : r) h += x;
  return h;
}

std::vector<Rat> RootSystem::to_fw(const Weight& x) const {
  std::vector<Rat> fw(rank_, Rat(0));
  for (int j = 0; j < rank_; ++j)
    for (int i = 0; i < rank_; ++i) fw[j] += x[i] * cartan_[i][j];
  return fw;
}

Weight RootSystem::from_fw(const std::vector<Rat>& fw) const {
  Weight x(rank_, Rat(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) x[i] += fw_to_simple_[i][j] * fw[j];
  return x;
}

Rat RootSystem::sym(const Weight& x, const Weight& y) const {
  // (alpha_i, alpha_j) = c_{ij} d_j.
  Rat s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += x[i] * y[j] * cartan_[i][j] * d_[j];
  }
  return s;
}

Rat RootSystem::length_sq(int idx) const {
  const Weight w = to_weight(root(idx));
  return sym(w, w);
}

Rat RootSystem::pair_coroot(const Weight& x, int idx) const {
  return 2 * sym(x, to_weight(root(idx))) / length_sq(idx);
}

Weight RootSystem::rho() const {
  return from_fw(std::vector<Rat>(rank_, Rat(1)));
}

Weight RootSystem::simple_reflection(int j, const Weight& x) const {
  Rat fwj = 0;
  for (int i = 0; i < rank_; ++i) fwj += x[i] * cartan_[i][j - 1];
  Weight y = x;
  y[j - 1] -= fwj;
  return y;
}

Weight RootSystem::weyl_apply(const std::vector<int>& word, const Weight& x) const {
  Weight y = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) y = simple_reflection(*it, y);
  return y;
}

Weight RootSystem::affine_action(const std::vector<int>& word, const Weight& x) const {
  const Weight r = rho();
  Weight y(rank_);
  for (int i = 0; i < rank_; ++i) y[i] = x[i] + r[i];
  y = weyl_apply(word, y);
  for (int i = 0; i < rank_; ++i) y[i] -= r[i];
  return y;
}

int RootSystem::string_p(int alpha, int beta) const {
  const Root a = root(alpha);
  Root b = root(beta);
  int p = 0;
  for (;;) {
    for (int i = 0; i < rank_; ++i) b[i] -= a[i];
    if (!root_index(b)) break;
    ++p;
  }
  return p;
}

}  // namespace symgap
