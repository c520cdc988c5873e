#include "symgap/linalg.hpp"

#include <stdexcept>

namespace symgap {

void QMatrix::append_row(const std::vector<Rat>& row) {
  if (cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<std::size_t> QMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    // Pick the structurally simplest nonzero pivot to keep entries small.
    std::size_t best = rows_;
    for (std::size_t i = r; i < rows_; ++i) {
      if (at(i, c) == 0) continue;
      if (best == rows_) { best = i; continue; }
      const Rat &p = at(best, c), &q = at(i, c);
      if (abs(numerator(q)) + abs(denominator(q)) <
          abs(numerator(p)) + abs(denominator(p)))
        best = i;
    }
    if (best == rows_) continue;
    if (best != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(r, j), at(best, j));
    const Rat inv = Rat(1) / at(r, c);
    for (std::size_t j = c; j < cols_; ++j) at(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      const Rat f = at(i, c);
      for (std::size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t QMatrix::rank() const {
  QMatrix tmp = *this;
  return tmp.rref().size();
}

std::vector<std::vector<Rat>> QMatrix::nullspace() const {
  QMatrix tmp = *this;
  const std::vector<std::size_t> pivots = tmp.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols_);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -tmp.at(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rat> RowSpan::reduce(std::vector<Rat> v) const {
  if (v.size() != dim_) throw std::invalid_argument("reduce: dimension mismatch");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Rat& f = v[pivots_[k]];
    if (f == 0) continue;
    const Rat c = f;
    for (std::size_t j = 0; j < dim_; ++j) v[j] -= c * basis_[k][j];
  }
  return v;
}

bool RowSpan::contains(const std::vector<Rat>& v) const {
  for (const Rat& x : reduce(v))
    if (x != 0) return false;
  return true;
}

bool RowSpan::add(std::vector<Rat> v) {
  v = reduce(std::move(v));
  std::size_t p = dim_;
  for (std::size_t j = 0; j < dim_; ++j)
    if (v[j] != 0) { p = j; break; }
  if (p == dim_) return false;
  const Rat inv = Rat(1) / v[p];
  for (Rat& x : v) x *= inv;
  // Back-substitute into the existing rows to keep the basis reduced.
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Rat f = basis_[k][p];
    if (f == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) basis_[k][j] -= f * v[j];
  }
  basis_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}


QMatrix multiply(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  QMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& f = a.at(i, k);
      if (f == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rat& g = b.at(k, j);
        if (g != 0) out.at(i, j) += f * g;
      }
    }
  return out;
}

}  // namespace symgap
