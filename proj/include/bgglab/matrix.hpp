// Dense matrices over an exact field (Rational or RatFunc). Column vectors;
// a matrix acts on the left.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bgglab/exactfield.hpp"

namespace bgglab {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<T>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  std::vector<std::vector<T>> columns() const {
    std::vector<std::vector<T>> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
  }
  void set_column(std::size_t c, const std::vector<T>& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  bool is_zero() const {
    for (const auto& x : a_) {
      if (!(x == T(0))) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix select_columns(const std::vector<std::size_t>& idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
      for (std::size_t r = 0; r < rows_; ++r) m(r, j) = (*this)(r, idx[j]);
    return m;
  }
  Matrix select_rows(const std::vector<std::size_t>& idx) const {
    Matrix m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(idx[i], c);
    return m;
  }
  Matrix block(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Matrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
    return m;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const T& s, Matrix m) {
    for (auto& x : m.a_) x = s * x;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix m(a.rows_, b.cols_);
    const T zero(0);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const T& x = a(i, l);
        if (x == zero) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& y = b(l, j);
          if (y == zero) continue;
          m(i, j) += x * y;
        }
      }
    }
    return m;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> out(a.rows_);
    const T zero(0);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        if (a(i, l) == zero || v[l] == zero) continue;
        out[i] += a(i, l) * v[l];
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

using QkMatrix = Matrix<RatFunc>;
using QMatrix = Matrix<Rational>;

/// Horizontal concatenation [a | b].
template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() && a.cols() != 0 && b.cols() != 0)
    throw std::invalid_argument("hstack row mismatch");
  const std::size_t rows = a.cols() ? a.rows() : b.rows();
  Matrix<T> m(rows, a.cols() + b.cols());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

}  // namespace bgglab
