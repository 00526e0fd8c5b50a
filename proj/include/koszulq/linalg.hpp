#pragma once

// Exact linear algebra over a Field: sparse row reduction to reduced row
// echelon form, kernels, and small dense helpers.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "koszulq/field.hpp"

namespace kq {

/// Sorted by column, no stored zeros.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;
using DenseVec = std::vector<Scalar>;

SparseVec to_sparse(const DenseVec& v);
DenseVec to_dense(const FieldHandle& field, const SparseVec& v, std::size_t n);
/// a + c * b
SparseVec axpy(const SparseVec& a, const Scalar& c, const SparseVec& b);

/// Incremental Gauss-Jordan elimination. Rows are added one at a time; the
/// stored basis stays in echelon form with unit pivots, and is brought to
/// full reduced form on demand.
class RowReducer {
 public:
  RowReducer(FieldHandle field, std::size_t ncols) : field_(std::move(field)), ncols_(ncols) {}

  /// Returns true when the row was independent of the rows added so far.
  bool add_row(SparseVec row);
  /// Remainder of `row` modulo the current row space (zero iff contained).
  SparseVec reduce(SparseVec row) const;
  bool contains(const SparseVec& row) const { return reduce(row).empty(); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  std::vector<std::size_t> pivots() const;
  /// Reduced row echelon basis, ordered by pivot column.
  std::vector<SparseVec> rref_rows() const;
  /// Basis of {x : r . x = 0 for every added row r}, one vector per free
  /// column, each with a 1 at its free column.
  std::vector<SparseVec> kernel() const;

 private:
  void fully_reduce() const;

  FieldHandle field_;
  std::size_t ncols_;
  // pivot column -> row with a 1 at the pivot and zeros left of it
  mutable std::map<std::size_t, SparseVec> rows_;
  mutable bool reduced_ = true;
};

/// Dense row-major matrix.
class Matrix {
 public:
  Matrix(FieldHandle field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_->zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldHandle& field() const { return field_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::size_t rank() const;
  /// Right kernel {x : A x = 0}.
  std::vector<DenseVec> kernel() const;
  Scalar determinant() const;
  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const;

 private:
  FieldHandle field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

}  // namespace kq
