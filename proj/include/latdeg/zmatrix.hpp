#pragma once

#include "latdeg/bigint.hpp"
#include "latdeg/error.hpp"

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace latdeg {

// Dense row-major matrix of arbitrary-precision integers. Empty shapes
// (0 x n, m x 0) are valid.
class ZMatrix {
 public:
  ZMatrix() = default;
  ZMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  // Ragged input is rejected with InvalidInput.
  ZMatrix(std::initializer_list<std::initializer_list<BigInt>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw InvalidInput("ragged matrix literal");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static ZMatrix from_rows(const std::vector<ZVector>& rows, std::size_t cols) {
    ZMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch(cols, rows[i].size());
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static ZMatrix identity(std::size_t n) {
    ZMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }

  BigInt& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return entries_[i * cols_ + j];
  }
  const BigInt& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return entries_[i * cols_ + j];
  }

  std::span<const BigInt> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  ZVector row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }
  std::span<const BigInt> entries() const { return entries_; }

  bool is_zero_row(std::size_t i) const {
    for (const auto& x : row(i))
      if (x != 0) return false;
    return true;
  }

  // Elementary unimodular operations.
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }
  void negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
  }
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
  }
  // col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
  }

  ZMatrix transposed() const {
    ZMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  ZMatrix drop_last_column() const {
    assert(cols_ > 0);
    ZMatrix t(rows_, cols_ - 1);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j + 1 < cols_; ++j) t(i, j) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const ZMatrix&, const ZMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

inline ZMatrix mat_mul(const ZMatrix& a, const ZMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch(a.cols(), b.rows());
  ZMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

// Row vector times matrix.
inline ZVector vec_mul(std::span<const BigInt> v, const ZMatrix& a) {
  if (v.size() != a.rows()) throw DimensionMismatch(a.rows(), v.size());
  ZVector w(a.cols());
  for (std::size_t k = 0; k < a.rows(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) w[j] += v[k] * a(k, j);
  }
  return w;
}

}  // namespace latdeg
