#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tdim/rational.hpp"

namespace tdim {

// Sparse rows: (column, value) pairs sorted by column, no zero values.
using SparseIntRow = std::vector<std::pair<int, Integer>>;
using SparseRatRow = std::vector<std::pair<int, Rational>>;

template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = DenseMatrix<Integer>;
using RationalMatrix = DenseMatrix<Rational>;

// Clears denominators and divides out the content. Empty if the row is zero.
SparseIntRow primitive_row(const SparseRatRow& row);
SparseIntRow primitive_row(SparseIntRow row);

// Sparse fraction-free elimination over Z with primitive-row normalization and
// min-column-count pivoting. Main rank engine.
std::size_t fraction_free_rank(std::vector<SparseIntRow> rows, int ncols);

// Textbook dense Bareiss elimination.
std::size_t bareiss_rank(IntMatrix m);

// Plain Gauss elimination over Q in natural column order.
std::size_t rational_gauss_rank(const std::vector<SparseRatRow>& rows, int ncols);

std::vector<SparseRatRow> to_sparse(const RationalMatrix& m);
IntMatrix to_integer_rows(const RationalMatrix& m);

}  // namespace tdim
