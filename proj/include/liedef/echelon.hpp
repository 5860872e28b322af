#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "liedef/matrix.hpp"
#include "liedef/rational.hpp"

namespace liedef {

/// Reduced row echelon form of a rational matrix. Pivot rule: leftmost
/// nonzero column, smallest remaining row index; pivots are 1.
struct Echelon {
  Matrix<Rational> rref;  // rank() rows
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;

  std::size_t rank() const { return pivots.size(); }
};

namespace detail {

using IntRow = std::vector<mpz_class>;

inline void make_primitive(IntRow& row) {
  mpz_class g(0);
  for (const auto& v : row) {
    if (v != 0) {
      g = gcd(g, v);
      if (g == 1) return;
    }
  }
  if (g > 1) {
    for (auto& v : row) {
      if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
  }
}

inline IntRow integer_row(const Matrix<Rational>& m, std::size_t r) {
  mpz_class den(1);
  for (std::size_t c = 0; c < m.cols(); ++c) den = lcm(den, m(r, c).denominator());
  IntRow row(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Rational& v = m(r, c);
    if (!v.is_zero()) row[c] = v.numerator() * (den / v.denominator());
  }
  make_primitive(row);
  return row;
}

}  // namespace detail

/// Gauss-Jordan elimination carried out on primitive integer rows; the only
/// divisions are exact content removals until the final unit normalization.
inline Echelon echelon(const Matrix<Rational>& m) {
  std::vector<detail::IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(detail::integer_row(m, r));

  Echelon out;
  out.cols = m.cols();
  std::size_t rank = 0;
  mpz_class a, b, g;
  for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const detail::IntRow& piv = rows[rank];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      g = gcd(piv[c], rows[r][c]);
      a = piv[c] / g;
      b = rows[r][c] / g;
      detail::IntRow& row = rows[r];
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (piv[k] == 0 && row[k] == 0) continue;
        row[k] = a * row[k] - b * piv[k];
      }
      detail::make_primitive(row);
    }
    out.pivots.push_back(c);
    ++rank;
  }

  out.rref = Matrix<Rational>(rank, m.cols());
  for (std::size_t r = 0; r < rank; ++r) {
    const mpz_class& pv = rows[r][out.pivots[r]];
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (rows[r][k] != 0) out.rref(r, k) = Rational(rows[r][k], pv);
    }
  }
  return out;
}

inline std::size_t rank(const Matrix<Rational>& m) { return echelon(m).rank(); }

/// Basis of the right kernel, one vector per free column in column order.
inline std::vector<std::vector<Rational>> nullspace(const Echelon& e) {
  std::vector<bool> is_pivot(e.cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < e.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(e.cols, Rational(0));
    v[f] = Rational(1);
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.rref(r, f);
    out.push_back(std::move(v));
  }
  return out;
}

inline std::vector<std::vector<Rational>> nullspace(const Matrix<Rational>& m) {
  return nullspace(echelon(m));
}

template <class S>
std::vector<S> apply(const Matrix<S>& m, std::span<const S> v) {
  if (v.size() != m.cols()) throw Error(Errc::dimension_mismatch, "matrix-vector shape");
  std::vector<S> out(m.rows(), S(0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

/// Incrementally maintained span of rational vectors, for exact
/// independence tests.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }

  bool contains(std::span<const Rational> v) const { return reduce(v).empty(); }

  /// Adds v if it is independent of the current span; reports whether it was.
  bool add(std::span<const Rational> v) {
    std::vector<Rational> r = reduce(v);
    if (r.empty()) return false;
    std::size_t p = 0;
    while (r[p].is_zero()) ++p;
    const Rational inv = r[p].inverse();
    for (auto& x : r) x *= inv;
    for (auto& [q, row] : basis_) {
      if (row[p].is_zero()) continue;
      const Rational f = row[p];
      for (std::size_t k = 0; k < dim_; ++k) row[k] -= f * r[k];
    }
    basis_.emplace_back(p, std::move(r));
    return true;
  }

 private:
  std::vector<Rational> reduce(std::span<const Rational> v) const {
    if (v.size() != dim_) throw Error(Errc::dimension_mismatch, "span vector length");
    std::vector<Rational> r(v.begin(), v.end());
    for (const auto& [p, row] : basis_) {
      if (r[p].is_zero()) continue;
      const Rational f = r[p];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!row[k].is_zero()) r[k] -= f * row[k];
      }
    }
    for (const auto& x : r) {
      if (!x.is_zero()) return r;
    }
    return {};
  }

  std::size_t dim_;
  std::vector<std::pair<std::size_t, std::vector<Rational>>> basis_;
};

}  // namespace liedef
