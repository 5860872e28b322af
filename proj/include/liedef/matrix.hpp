#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "liedef/errors.hpp"

namespace liedef {

/// Dense row-major matrix over a scalar ring.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}
  Matrix(std::initializer_list<std::initializer_list<S>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(Errc::dimension_mismatch, "ragged matrix literal");
      for (const auto& v : row) data_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<S>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw Error(Errc::dimension_mismatch, "column length");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<S> column(std::size_t c) const {
    std::vector<S> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  void set_column(std::size_t c, const std::vector<S>& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  bool is_zero() const {
    for (const auto& v : data_) {
      if (!v.is_zero()) return false;
    }
    return true;
  }

  template <class T, class F>
  Matrix<T> map(F f) const {
    Matrix<T> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    }
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix operator-() const {
    Matrix out = *this;
    for (auto& v : out.data_) v = -v;
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::dimension_mismatch, "matrix product shape");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
        }
      }
    }
    return out;
  }

  friend Matrix operator*(Matrix a, const S& s) {
    for (auto& v : a.data_) v = v * s;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string str() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
      out += r == 0 ? "[" : ",[";
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c > 0) out += ",";
        out += (*this)(r, c).str();
      }
      out += "]";
    }
    return out + "]";
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::dimension_mismatch, "matrix shape");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

template <class S>
std::ostream& operator<<(std::ostream& os, const Matrix<S>& m) {
  return os << m.str();
}

// Plain Gaussian elimination over a field; meant for the small matrices of
// basis changes (3x3, 2x2). Large exact eliminations go through echelon.hpp.

template <class S>
S determinant(Matrix<S> m) {
  if (m.rows() != m.cols()) throw Error(Errc::dimension_mismatch, "determinant of non-square");
  const std::size_t n = m.rows();
  S det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return S(0);
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det = det * m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      const S f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) = m(r, k) - f * m(c, k);
    }
  }
  return det;
}

template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& a) {
  if (a.rows() != a.cols()) throw Error(Errc::dimension_mismatch, "inverse of non-square");
  const std::size_t n = a.rows();
  Matrix<S> m = a;
  Matrix<S> inv = Matrix<S>::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return std::nullopt;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(m(p, k), m(c, k));
        std::swap(inv(p, k), inv(c, k));
      }
    }
    const S piv = m(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      m(c, k) = m(c, k) / piv;
      inv(c, k) = inv(c, k) / piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c).is_zero()) continue;
      const S f = m(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        m(r, k) = m(r, k) - f * m(c, k);
        inv(r, k) = inv(r, k) - f * inv(c, k);
      }
    }
  }
  return inv;
}

}  // namespace liedef
