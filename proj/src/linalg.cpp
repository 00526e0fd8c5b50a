#include "koszulq/linalg.hpp"

#include <algorithm>

namespace kq {

SparseVec to_sparse(const DenseVec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return out;
}

DenseVec to_dense(const FieldHandle& field, const SparseVec& v, std::size_t n) {
  DenseVec out(n, field->zero());
  for (const auto& [c, x] : v) out.at(c) = x;
  return out;
}

SparseVec axpy(const SparseVec& a, const Scalar& c, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, c * b[j].second);
      ++j;
    } else {
      Scalar s = a[i].second + c * b[j].second;
      if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

namespace {

void normalize_sparse(SparseVec& row) {
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVec merged;
  for (auto& e : row) {
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      merged.push_back(std::move(e));
    }
  }
  std::erase_if(merged, [](const auto& e) { return e.second.is_zero(); });
  row = std::move(merged);
}

}  // namespace

SparseVec RowReducer::reduce(SparseVec row) const {
  normalize_sparse(row);
  // Pivot rows are zero left of their pivot, so a left-to-right sweep
  // clears every pivot column.
  std::size_t k = 0;
  while (k < row.size()) {
    auto it = rows_.find(row[k].first);
    if (it == rows_.end()) {
      ++k;
      continue;
    }
    Scalar c = -row[k].second;
    row = axpy(row, c, it->second);
  }
  return row;
}

bool RowReducer::add_row(SparseVec row) {
  for (const auto& e : row)
    if (e.first >= ncols_) throw InvalidArgument("row entry beyond column count");
  row = reduce(std::move(row));
  // After reduce() every remaining entry is at a non-pivot column.
  if (row.empty()) return false;
  Scalar inv = row.front().second.inverse();
  for (auto& e : row) e.second *= inv;
  rows_.emplace(row.front().first, std::move(row));
  reduced_ = false;
  return true;
}

void RowReducer::fully_reduce() const {
  if (reduced_) return;
  // Back substitution from the last pivot up.
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseVec& row = it->second;
    std::size_t k = 1;
    while (k < row.size()) {
      auto p = rows_.find(row[k].first);
      if (p == rows_.end() || p->first == it->first) {
        ++k;
        continue;
      }
      Scalar c = -row[k].second;
      row = axpy(row, c, p->second);
    }
  }
  reduced_ = true;
}

std::vector<std::size_t> RowReducer::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& [c, _] : rows_) out.push_back(c);
  return out;
}

std::vector<SparseVec> RowReducer::rref_rows() const {
  fully_reduce();
  std::vector<SparseVec> out;
  for (const auto& [_, row] : rows_) out.push_back(row);
  return out;
}

std::vector<SparseVec> RowReducer::kernel() const {
  fully_reduce();
  std::vector<char> is_pivot(ncols_, 0);
  for (const auto& [c, _] : rows_) is_pivot[c] = 1;
  std::vector<SparseVec> basis;
  std::map<std::size_t, std::size_t> free_index;
  for (std::size_t c = 0; c < ncols_; ++c) {
    if (is_pivot[c]) continue;
    free_index[c] = basis.size();
    basis.push_back({{c, field_->one()}});
  }
  for (const auto& [p, row] : rows_) {
    for (std::size_t k = 1; k < row.size(); ++k)
      basis[free_index.at(row[k].first)].emplace_back(p, -row[k].second);
  }
  for (auto& v : basis) normalize_sparse(v);
  return basis;
}

// ---------------------------------------------------------------------------

std::size_t Matrix::rank() const {
  RowReducer r(field_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    r.add_row(to_sparse(DenseVec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_)));
  return r.rank();
}

std::vector<DenseVec> Matrix::kernel() const {
  RowReducer r(field_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    r.add_row(to_sparse(DenseVec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_)));
  std::vector<DenseVec> out;
  for (const auto& v : r.kernel()) out.push_back(to_dense(field_, v, cols_));
  return out;
}

Scalar Matrix::determinant() const {
  if (rows_ != cols_) throw InvalidArgument("determinant of a non-square matrix");
  std::vector<Scalar> a = data_;
  const std::size_t n = rows_;
  Scalar det = field_->one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv * n + c].is_zero()) ++piv;
    if (piv == n) return field_->zero();
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[piv * n + k], a[c * n + k]);
      det = -det;
    }
    det *= a[c * n + c];
    Scalar inv = a[c * n + c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r * n + c].is_zero()) continue;
      Scalar f = a[r * n + c] * inv;
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
    }
  }
  return det;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InvalidArgument("matrix shape mismatch");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
    }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

}  // namespace kq
