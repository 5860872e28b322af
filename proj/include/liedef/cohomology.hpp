#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liedef/coderivation.hpp"
#include "liedef/echelon.hpp"
#include "liedef/errors.hpp"
#include "liedef/rational.hpp"

namespace liedef {

/// Matrix of D = [d, .] : L_k -> L_{k+1} in flattened coordinates
/// (column (j-1)*N + i-1 is the image of phi^{S(j,k)}_i).
inline Matrix<Rational> coboundary_matrix(const Codifferential<Rational>& d, unsigned k) {
  const unsigned n = d.dim();
  if (k > n) throw Error(Errc::out_of_range, "degree above the ambient dimension");
  const std::size_t cols = static_cast<std::size_t>(n) * binomial(n, k);
  const std::size_t rows = static_cast<std::size_t>(n) * binomial(n, k + 1);
  Matrix<Rational> m(rows, cols);
  const auto ws = words(n, k);
  for (std::size_t j = 0; j < ws.size(); ++j) {
    for (unsigned i = 1; i <= n; ++i) {
      const auto image = bracket(d.body(), Coderivation<Rational>::basis(n, ws[j], i)).flatten();
      m.set_column(j * n + (i - 1), image);
    }
  }
  return m;
}

/// Chosen representatives splitting L_k as span(h) + span(b) + span(p):
/// h are cocycles representing a basis of H^k, b is a basis of D(L_{k-1}),
/// and D maps span(p) isomorphically onto D(L_k).
struct Splitting {
  unsigned degree = 0;
  std::vector<Coderivation<Rational>> h;
  std::vector<Coderivation<Rational>> b;
  std::vector<Coderivation<Rational>> p;
};

struct DegreeData {
  unsigned degree = 0;
  std::size_t dim_l = 0;
  std::size_t rank_d = 0;   // rank of D : L_k -> L_{k+1}
  std::size_t dim_ker = 0;  // cocycles
  std::size_t dim_h = 0;
};

/// Prebasis overrides for H^k, keyed by k.
using PrebasisOverrides = std::map<unsigned, std::vector<Coderivation<Rational>>>;

/// The coboundary matrices D_0 .. D_kmax of a certified codifferential,
/// with their echelon forms. Immutable after construction.
class CoboundaryComplex {
 public:
  CoboundaryComplex(const Codifferential<Rational>& d, unsigned kmax) : d_(d) {
    d.require_certified();
    if (kmax > d.dim()) throw Error(Errc::out_of_range, "kmax above the ambient dimension");
    for (unsigned k = 0; k <= kmax; ++k) {
      matrices_.push_back(coboundary_matrix(d, k));
      echelons_.push_back(echelon(matrices_.back()));
    }
  }

  const Codifferential<Rational>& codifferential() const { return d_; }
  unsigned dim() const { return d_.dim(); }
  unsigned kmax() const { return static_cast<unsigned>(matrices_.size()) - 1; }
  const Matrix<Rational>& matrix(unsigned k) const { return matrices_.at(k); }
  const Echelon& echelon_of(unsigned k) const { return echelons_.at(k); }

  DegreeData degree_data(unsigned k) const {
    DegreeData out;
    out.degree = k;
    out.dim_l = matrices_.at(k).cols();
    out.rank_d = echelons_.at(k).rank();
    out.dim_ker = out.dim_l - out.rank_d;
    out.dim_h = out.dim_ker - (k == 0 ? 0 : echelons_.at(k - 1).rank());
    return out;
  }

  Splitting splitting(unsigned k,
                      const std::optional<std::vector<Coderivation<Rational>>>& h_override = {}) const {
    const unsigned n = dim();
    const DegreeData dd = degree_data(k);
    Splitting out;
    out.degree = k;
    SpanBuilder span(dd.dim_l);

    if (k > 0) {
      const Matrix<Rational>& prev = matrices_.at(k - 1);
      for (std::size_t c : echelons_.at(k - 1).pivots) {
        const auto col = prev.column(c);
        span.add(col);
        out.b.push_back(Coderivation<Rational>::unflatten(n, k, col));
      }
    }

    const Matrix<Rational>& dk = matrices_.at(k);
    auto is_cocycle = [&](const std::vector<Rational>& v) {
      for (const auto& x : apply<Rational>(dk, v)) {
        if (!x.is_zero()) return false;
      }
      return true;
    };

    if (h_override) {
      if (h_override->size() != dd.dim_h) {
        throw Error(Errc::bad_prebasis, "H^" + std::to_string(k) + " has dimension " +
                                            std::to_string(dd.dim_h) + " but " +
                                            std::to_string(h_override->size()) +
                                            " representatives were supplied");
      }
      for (const auto& z : *h_override) {
        if (z.dim() != n || z.arity() != k) {
          throw Error(Errc::bad_prebasis, "representative outside L_" + std::to_string(k));
        }
        const auto v = z.flatten();
        if (!is_cocycle(v)) throw Error(Errc::bad_prebasis, render(z) + " is not a cocycle");
        if (!span.add(v)) {
          throw Error(Errc::bad_prebasis, render(z) + " is dependent modulo coboundaries");
        }
        out.h.push_back(z);
      }
    } else {
      for (const auto& z : nullspace(echelons_.at(k))) {
        if (out.h.size() == dd.dim_h) break;
        if (span.add(z)) out.h.push_back(Coderivation<Rational>::unflatten(n, k, z));
      }
    }

    for (std::size_t c : echelons_.at(k).pivots) {
      std::vector<Rational> e(dd.dim_l, Rational(0));
      e[c] = Rational(1);
      out.p.push_back(Coderivation<Rational>::unflatten(n, k, e));
    }
    return out;
  }

 private:
  Codifferential<Rational> d_;
  std::vector<Matrix<Rational>> matrices_;
  std::vector<Echelon> echelons_;
};

struct CohomologyReport {
  unsigned dim = 0;
  std::vector<DegreeData> degrees;
  std::vector<Splitting> splittings;

  std::size_t h(unsigned k) const { return degrees.at(k).dim_h; }
};

inline CohomologyReport cohomology_report(const Codifferential<Rational>& d, unsigned kmax,
                                          const PrebasisOverrides& overrides = {}) {
  const CoboundaryComplex cx(d, kmax);
  CohomologyReport out;
  out.dim = d.dim();
  for (unsigned k = 0; k <= kmax; ++k) {
    out.degrees.push_back(cx.degree_data(k));
    auto it = overrides.find(k);
    out.splittings.push_back(
        cx.splitting(k, it == overrides.end() ? std::nullopt
                                              : std::optional<std::vector<Coderivation<Rational>>>(it->second)));
  }
  return out;
}

/// Splitting of L_k alone; needs D_{k-1} and D_k.
inline Splitting splitting(const Codifferential<Rational>& d, unsigned k,
                           const std::optional<std::vector<Coderivation<Rational>>>& h_override = {}) {
  return CoboundaryComplex(d, k).splitting(k, h_override);
}

}  // namespace liedef
