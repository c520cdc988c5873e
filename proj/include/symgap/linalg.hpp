#pragma once

// Dense exact linear algebra over the rationals: row echelon form, rank,
// nullspace, and membership tests.  Sizes here are small (weight blocks,
// grading components), so a dense fraction-aware Gaussian elimination with
// partial pivot-by-simplicity is enough; GMP rationals keep it exact.

#include "symgap/rational.hpp"

#include <cstddef>
#include <vector>

namespace symgap {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void append_row(const std::vector<Rat>& row);

  // In-place reduced row echelon form; returns pivot column indices.
  std::vector<std::size_t> rref();

  std::size_t rank() const;

  // Basis of the right nullspace, one vector per free column.
  std::vector<std::vector<Rat>> nullspace() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> a_;
};

// Plain product; a.cols() must equal b.rows().
QMatrix multiply(const QMatrix& a, const QMatrix& b);

// Row-reduced basis maintained incrementally; supports span membership and
// residual reduction.  Used for subspace arithmetic (filtrands, quotients).
class RowSpan {
 public:
  explicit RowSpan(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }

  // Reduces v against the basis; returns the residual (zero iff v in span).
  std::vector<Rat> reduce(std::vector<Rat> v) const;

  bool contains(const std::vector<Rat>& v) const;

  // Adds v if independent; returns true when the rank grew.
  bool add(std::vector<Rat> v);

  const std::vector<std::vector<Rat>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t dim_;
  std::vector<std::vector<Rat>> basis_;   // each normalized, pivot = 1
  std::vector<std::size_t> pivots_;       // pivot column of basis_[k]
};

}  // namespace symgap
