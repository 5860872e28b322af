#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "liedef/errors.hpp"
#include "liedef/exterior.hpp"
#include "liedef/matrix.hpp"

namespace liedef {

/// Formal linear combination of basis words, keyed in ordinal order.
template <class S>
using Chain = std::map<MultiIndex, S>;

/// Element of L_k = Hom(Lambda^k V, V), stored as the N x C(N,k) grid
/// a^i_j with phi(f_{S(j,k)}) = a^i_j f_i. Arity 0 models L_0 = V.
///
/// Flattened coordinates put the basis coderivation phi^{S(j,k)}_i at
/// position (j-1)*N + (i-1).
template <class S>
class Coderivation {
 public:
  Coderivation() = default;

  Coderivation(unsigned dim, unsigned arity)
      : dim_(dim), arity_(arity), grid_(dim, binomial(dim, arity)) {
    if (dim == 0) throw Error(Errc::dimension_mismatch, "ambient dimension must be positive");
  }

  Coderivation(unsigned arity, Matrix<S> grid)
      : dim_(static_cast<unsigned>(grid.rows())), arity_(arity), grid_(std::move(grid)) {
    if (dim_ == 0) throw Error(Errc::dimension_mismatch, "ambient dimension must be positive");
    if (grid_.cols() != binomial(dim_, arity_)) {
      throw Error(Errc::dimension_mismatch,
                  "grid needs C(" + std::to_string(dim_) + "," + std::to_string(arity_) +
                      ") columns, got " + std::to_string(grid_.cols()));
    }
  }

  /// phi^{word}_target: sends f_word to f_target and every other word to 0.
  static Coderivation basis(unsigned dim, const MultiIndex& word, unsigned target) {
    Coderivation c(dim, static_cast<unsigned>(word.size()));
    c.coeff(target, word) = S(1);
    return c;
  }

  static Coderivation unflatten(unsigned dim, unsigned arity, std::span<const S> flat) {
    Coderivation c(dim, arity);
    if (flat.size() != c.size()) throw Error(Errc::dimension_mismatch, "flat coordinate length");
    for (std::size_t j = 0; j < c.word_count(); ++j) {
      for (unsigned i = 0; i < dim; ++i) c.grid_(i, j) = flat[j * dim + i];
    }
    return c;
  }

  unsigned dim() const { return dim_; }
  unsigned arity() const { return arity_; }
  /// Degree in the graded Lie algebra of coderivations: arity - 1.
  int degree() const { return static_cast<int>(arity_) - 1; }
  std::size_t word_count() const { return grid_.cols(); }
  std::size_t size() const { return static_cast<std::size_t>(dim_) * word_count(); }
  /// Arity above N: Lambda^k V = 0, so the grid has no columns.
  bool beyond_top() const { return arity_ > dim_; }

  const Matrix<S>& grid() const { return grid_; }

  const S& coeff(unsigned target, const MultiIndex& word) const {
    return grid_(target - 1, column_of(word));
  }
  S& coeff(unsigned target, const MultiIndex& word) { return grid_(target - 1, column_of(word)); }

  std::vector<S> flatten() const {
    std::vector<S> out;
    out.reserve(size());
    for (std::size_t j = 0; j < word_count(); ++j) {
      for (unsigned i = 0; i < dim_; ++i) out.push_back(grid_(i, j));
    }
    return out;
  }

  bool is_zero() const { return grid_.is_zero(); }

  template <class T, class F>
  Coderivation<T> map(F f) const {
    return Coderivation<T>(arity_, grid_.template map<T>(f));
  }

  Coderivation& operator+=(const Coderivation& o) {
    check_compatible(o);
    grid_ += o.grid_;
    return *this;
  }
  Coderivation& operator-=(const Coderivation& o) {
    check_compatible(o);
    grid_ -= o.grid_;
    return *this;
  }
  friend Coderivation operator+(Coderivation a, const Coderivation& b) { return a += b; }
  friend Coderivation operator-(Coderivation a, const Coderivation& b) { return a -= b; }
  Coderivation operator-() const { return Coderivation(arity_, -grid_); }
  friend Coderivation operator*(const Coderivation& a, const S& s) {
    return Coderivation(a.arity_, a.grid_ * s);
  }
  friend Coderivation operator*(const S& s, const Coderivation& a) { return a * s; }

  friend bool operator==(const Coderivation& a, const Coderivation& b) {
    return a.dim_ == b.dim_ && a.arity_ == b.arity_ && a.grid_ == b.grid_;
  }

 private:
  std::size_t column_of(const MultiIndex& word) const {
    if (word.size() != arity_ || (!word.empty() && word.back() > dim_)) {
      throw Error(Errc::out_of_range, "word " + word.str() + " not in Lambda^" +
                                          std::to_string(arity_) + " of dimension " +
                                          std::to_string(dim_));
    }
    return static_cast<std::size_t>(ordinal_of(word) - 1);
  }

  void check_compatible(const Coderivation& o) const {
    if (dim_ != o.dim_ || arity_ != o.arity_) {
      throw Error(Errc::dimension_mismatch, "coderivations live in different L_k");
    }
  }

  unsigned dim_ = 0;
  unsigned arity_ = 0;
  Matrix<S> grid_;
};

/// Value of the coderivation extension of phi on a basis word of length m:
/// the sum over Sh(k, m-k) of sign * phi(first block) ^ (second block).
template <class S>
Chain<S> extend_apply(const Coderivation<S>& phi, const MultiIndex& word) {
  const unsigned k = phi.arity();
  const unsigned m = static_cast<unsigned>(word.size());
  if (m < k) {
    throw Error(Errc::arity_mismatch, "word of length " + std::to_string(m) +
                                          " is shorter than arity " + std::to_string(k));
  }
  Chain<S> out;
  auto accumulate = [&](const MultiIndex& block, const MultiIndex& rest, int sign) {
    for (unsigned i = 1; i <= phi.dim(); ++i) {
      const S& a = phi.coeff(i, block);
      if (a.is_zero()) continue;
      auto w = wedge(MultiIndex{i}, rest);
      if (!w) continue;
      S term = w->sign * sign > 0 ? a : -a;
      auto [it, inserted] = out.emplace(w->word, term);
      if (!inserted) it->second += term;
    }
  };
  for (const Unshuffle& u : unshuffles(k, m - k)) {
    std::vector<unsigned> block, rest;
    for (unsigned i = 0; i < k; ++i) block.push_back(word[u.perm[i] - 1]);
    for (unsigned i = k; i < m; ++i) rest.push_back(word[u.perm[i] - 1]);
    accumulate(MultiIndex(std::move(block)), MultiIndex(std::move(rest)), u.sign);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

/// Matrix B of phi : Lambda^m V -> Lambda^{m-k+1} V, column j holding the
/// coordinates of phi(f_{S(j,m)}).
template <class S>
Matrix<S> rep_matrix(const Coderivation<S>& phi, unsigned m) {
  const unsigned k = phi.arity();
  if (m < k) {
    throw Error(Errc::arity_mismatch,
                "cannot extend arity " + std::to_string(k) + " to words of length " + std::to_string(m));
  }
  const unsigned n = phi.dim();
  const unsigned target = m - k + 1;
  Matrix<S> b(binomial(n, target), binomial(n, m));
  const auto ws = words(n, m);
  for (std::size_t j = 0; j < ws.size(); ++j) {
    for (const auto& [w, c] : extend_apply(phi, ws[j])) b(ordinal_of(w) - 1, j) = c;
  }
  return b;
}

/// Composite phi psi in L_{k+l-1}: phi applied after the extension of psi.
template <class S>
Coderivation<S> compose(const Coderivation<S>& phi, const Coderivation<S>& psi) {
  if (phi.dim() != psi.dim()) throw Error(Errc::dimension_mismatch, "composing across dimensions");
  const unsigned k = phi.arity();
  const unsigned l = psi.arity();
  if (k + l == 0) throw Error(Errc::arity_mismatch, "composite of two L_0 elements has arity -1");
  const unsigned m = k + l - 1;
  if (k == 0) return Coderivation<S>(phi.dim(), m);  // psi kills words shorter than l
  return Coderivation<S>(m, phi.grid() * rep_matrix(psi, m));
}

inline int graded_sign(int deg_a, int deg_b) { return ((deg_a * deg_b) % 2 == 0) ? 1 : -1; }

/// [phi, psi] = phi psi - (-1)^{deg phi deg psi} psi phi.
template <class S>
Coderivation<S> bracket(const Coderivation<S>& phi, const Coderivation<S>& psi) {
  if (phi.dim() != psi.dim()) throw Error(Errc::dimension_mismatch, "bracket across dimensions");
  Coderivation<S> out = compose(phi, psi);
  const Coderivation<S> back = compose(psi, phi);
  if (graded_sign(phi.degree(), psi.degree()) > 0) {
    out -= back;
  } else {
    out += back;
  }
  return out;
}

/// d o d = [d, d] / 2 as an element of L_3; zero iff d satisfies Jacobi.
template <class S>
Coderivation<S> jacobi_residual(const Coderivation<S>& d) {
  if (d.arity() != 2) throw Error(Errc::arity_mismatch, "Jacobi residual needs an element of L_2");
  return compose(d, d);
}

/// For N = 3: the column B with A B = d o d on f1^f2^f3.
template <class S>
std::array<S, 3> b_vector3(const Matrix<S>& a) {
  if (a.rows() != 3 || a.cols() != 3) throw Error(Errc::dimension_mismatch, "b_vector3 needs 3x3");
  return {-a(0, 1) - a(1, 2), a(0, 0) - a(2, 2), a(1, 0) + a(2, 1)};
}

/// A Lie bracket given as an element of L_2, with its Jacobi certificate.
template <class S>
class Codifferential {
 public:
  explicit Codifferential(Coderivation<S> body) : body_(std::move(body)) {
    if (body_.arity() != 2) throw Error(Errc::arity_mismatch, "a codifferential lives in L_2");
    certified_ = jacobi_residual(body_).is_zero();
  }

  const Coderivation<S>& body() const { return body_; }
  unsigned dim() const { return body_.dim(); }
  bool certified() const { return certified_; }

  /// Throws NotCertified unless the Jacobi residual vanishes.
  const Codifferential& require_certified() const {
    if (!certified_) throw Error(Errc::not_certified, "Jacobi residual is nonzero");
    return *this;
  }

 private:
  Coderivation<S> body_;
  bool certified_ = false;
};

/// Basis name: psi for even arity, phi for odd, e.g. "psi^{13}_2".
inline std::string basis_name(const MultiIndex& word, unsigned target) {
  return std::string(word.size() % 2 == 0 ? "psi" : "phi") + "^{" + word.compact() + "}_" +
         std::to_string(target);
}

/// Linear combination of basis names, e.g. "psi^{13}_3-psi^{12}_2".
template <class S>
std::string render(const Coderivation<S>& c) {
  std::string out;
  const auto ws = words(c.dim(), c.arity());
  for (const MultiIndex& w : ws) {
    for (unsigned i = 1; i <= c.dim(); ++i) {
      const S& v = c.coeff(i, w);
      if (v.is_zero()) continue;
      std::string coef = v.str();
      std::string piece;
      if (coef == "1") {
        piece = basis_name(w, i);
      } else if (coef == "-1") {
        piece = "-" + basis_name(w, i);
      } else {
        piece = (coef.find_first_of("+-/*", 1) == std::string::npos ? coef : "(" + coef + ")") + "*" +
                basis_name(w, i);
      }
      if (!out.empty() && piece[0] != '-') out += "+";
      out += piece;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace liedef
