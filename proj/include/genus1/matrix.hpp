#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "genus1/errors.hpp"

namespace genus1 {

/// Dense row-major matrix over any ring-like value type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  /// Throws DomainError if the rows are ragged.
  explicit Matrix(std::vector<std::vector<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.front().size();
    data_.reserve(rows_ * cols_);
    for (auto& row : rows) {
      if (row.size() != cols_) throw DomainError("ragged matrix rows");
      for (auto& v : row) data_.push_back(std::move(v));
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t;
    t.rows_ = cols_;
    t.cols_ = rows_;
    t.data_.reserve(data_.size());
    for (std::size_t c = 0; c < cols_; ++c)
      for (std::size_t r = 0; r < rows_; ++r) t.data_.push_back((*this)(r, c));
    return t;
  }

  /// Deletes the given row and column.
  Matrix minor_matrix(std::size_t row, std::size_t col) const {
    Matrix m;
    m.rows_ = rows_ - 1;
    m.cols_ = cols_ - 1;
    m.data_.reserve(m.rows_ * m.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row) continue;
      for (std::size_t c = 0; c < cols_; ++c)
        if (c != col) m.data_.push_back((*this)(r, c));
    }
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product dimension mismatch");
  if (a.cols() == 0) throw DomainError("empty matrix product");
  Matrix<T> out(a.rows(), b.cols(), a(0, 0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      T acc = a(i, 0) * b(0, j);
      for (std::size_t k = 1; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = std::move(acc);
    }
  return out;
}

namespace detail {

template <class T>
T cofactor_determinant(const Matrix<T>& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.rows() - row;
  if (n == 1) return m(row, cols[0]);
  T acc = m(row, cols[0]);
  bool first = true;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    T term = m(row, c) * cofactor_determinant(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    if (first) {
      acc = std::move(term);
      first = false;
    } else if (k % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

}  // namespace detail

/// Determinant by cofactor expansion along the first row. Intended for the
/// small matrices that occur here; sizes above 6 are rejected.
template <class T>
T determinant(const Matrix<T>& m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  if (m.rows() == 0) throw DomainError("determinant of an empty matrix");
  if (m.rows() > 6) throw DomainError("cofactor determinant limited to size 6");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
  return detail::cofactor_determinant(m, cols, 0);
}

}  // namespace genus1
