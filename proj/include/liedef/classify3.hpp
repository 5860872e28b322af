#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liedef/coderivation.hpp"
#include "liedef/echelon.hpp"
#include "liedef/errors.hpp"
#include "liedef/matrix.hpp"
#include "liedef/rational.hpp"

namespace liedef {

/// Matrix of g ^ g on Lambda^2 V: q^i_j = g^k_u g^l_v - g^l_u g^k_v with
/// S(j,2) = (u,v) and S(i,2) = (k,l).
template <class S>
Matrix<S> induced_q(const Matrix<S>& g) {
  if (g.rows() != g.cols()) throw Error(Errc::dimension_mismatch, "basis change must be square");
  if (determinant(g).is_zero()) throw Error(Errc::singular, "basis change is singular");
  const unsigned n = static_cast<unsigned>(g.rows());
  const auto ws = words(n, 2);
  Matrix<S> q(ws.size(), ws.size());
  for (std::size_t j = 0; j < ws.size(); ++j) {
    const unsigned u = ws[j][0] - 1, v = ws[j][1] - 1;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const unsigned k = ws[i][0] - 1, l = ws[i][1] - 1;
      q(i, j) = g(k, u) * g(l, v) - g(l, u) * g(k, v);
    }
  }
  return q;
}

/// g*(d) = g^{-1} d g, i.e. A' = G^{-1} A Q. The columns of G are the new
/// basis vectors written in the old basis.
template <class S>
Codifferential<S> transport(const Codifferential<S>& d, const Matrix<S>& g) {
  if (g.rows() != d.dim()) throw Error(Errc::dimension_mismatch, "basis change size");
  const Matrix<S> q = induced_q(g);
  const auto gi = inverse(g);
  if (!gi) throw Error(Errc::singular, "basis change is singular");
  Codifferential<S> out(Coderivation<S>(2, *gi * d.body().grid() * q));
  if (d.certified() && !out.certified()) throw Error(Errc::internal, "transport broke Jacobi");
  return out;
}

/// True iff G A' = A Q with det G != 0, i.e. d' = g*(d).
template <class S>
bool verify_equiv(const Codifferential<S>& d, const Codifferential<S>& d_prime, const Matrix<S>& g,
                  std::string* diagnostic = nullptr) {
  auto fail = [&](std::string why) {
    if (diagnostic) *diagnostic = std::move(why);
    return false;
  };
  if (d.dim() != d_prime.dim() || g.rows() != d.dim() || g.cols() != d.dim()) {
    return fail("shapes disagree");
  }
  if (determinant(g).is_zero()) return fail("G is singular");
  const Matrix<S> q = induced_q(g);
  if (!(g * d_prime.body().grid() == d.body().grid() * q)) return fail("G A' != A Q");
  return true;
}

/// (l + m)^2 / (l m), for use over any field (symbolic checks included).
template <class S>
S kappa_of(const S& l, const S& m) {
  return (l + m) * (l + m) / (l * m);
}

/// Complete invariant of a point of P^1 / Sigma_2 over the ground field.
struct FamilyInvariant {
  bool zero_product = false;  // the class of d(1:0)
  Rational kappa;             // (l + m)^2 / (l m) when !zero_product

  friend bool operator==(const FamilyInvariant& a, const FamilyInvariant& b) {
    return a.zero_product == b.zero_product && (a.zero_product || a.kappa == b.kappa);
  }

  std::string str() const { return zero_product ? "ZeroProduct" : "kappa=" + kappa.str(); }
};

inline FamilyInvariant family_invariant(const Rational& l, const Rational& m) {
  if (l.is_zero() && m.is_zero()) throw Error(Errc::both_zero, "(0:0) is not a point of P^1");
  if ((l * m).is_zero()) return FamilyInvariant{true, Rational(0)};
  return FamilyInvariant{false, kappa_of(l, m)};
}

/// Invariant from trace and determinant of R = [[l,1],[0,m]] or any matrix
/// similar to a multiple of it.
inline FamilyInvariant family_invariant_from_trace_det(const Rational& tr, const Rational& det) {
  if (det.is_zero()) {
    if (tr.is_zero()) throw Error(Errc::both_zero, "nilpotent R has no family point");
    return FamilyInvariant{true, Rational(0)};
  }
  return FamilyInvariant{false, tr * tr / det};
}

enum class Label { abelian, d1, d2, d3, family };

inline std::string_view label_name(Label l) {
  switch (l) {
    case Label::abelian: return "abelian";
    case Label::d1: return "d1";
    case Label::d2: return "d2";
    case Label::d3: return "d3";
    case Label::family: return "family";
  }
  return "?";
}

struct CanonicalClass {
  Label label = Label::abelian;
  std::optional<FamilyInvariant> invariant;  // iff label == family
  /// Rational representative (p:q), coprime integers, |p| >= |q|, p > 0,
  /// when the class has rational eigenvalue ratio.
  std::optional<std::pair<Rational, Rational>> point;

  friend bool operator==(const CanonicalClass& a, const CanonicalClass& b) {
    return a.label == b.label && a.invariant == b.invariant;
  }

  /// Marked point of the family fixed by the invariant alone:
  /// kappa = 0 is (1:-1), kappa = 4 is (1:1), ZeroProduct is (1:0).
  std::optional<std::string> marked_point() const {
    if (label != Label::family) return std::nullopt;
    if (invariant->zero_product) return "(1:0)";
    if (invariant->kappa.is_zero()) return "(1:-1)";
    if (invariant->kappa == Rational(4)) return "(1:1)";
    return std::nullopt;
  }

  std::string str() const {
    if (label != Label::family) return std::string(label_name(label));
    if (point) return "d(" + point->first.str() + ":" + point->second.str() + ")";
    return "family " + invariant->str();
  }
};

namespace detail {

inline Matrix<Rational> mat3(std::array<Rational, 9> e) {
  Matrix<Rational> m(3, 3);
  for (std::size_t i = 0; i < 9; ++i) m(i / 3, i % 3) = e[i];
  return m;
}

/// (p, q) coprime integers with p:q = a:b, |p| >= |q|, p > 0; the pair is
/// swapped if needed. Returns also whether a swap happened.
inline std::pair<std::pair<Rational, Rational>, bool> normalize_point(Rational a, Rational b) {
  bool swapped = false;
  if (a.abs() < b.abs() || (a.abs() == b.abs() && a.sign() < 0)) {
    std::swap(a, b);
    swapped = true;
  }
  const mpz_class den = lcm(a.denominator(), b.denominator());
  mpz_class p = a.numerator() * (den / a.denominator());
  mpz_class q = b.numerator() * (den / b.denominator());
  const mpz_class g = gcd(p, q);
  p /= g;
  q /= g;
  if (p < 0) {
    p = -p;
    q = -q;
  }
  return {{Rational(p, mpz_class(1)), Rational(q, mpz_class(1))}, swapped};
}

}  // namespace detail

/// Class of the point (l:m), with its normalized rational representative.
inline CanonicalClass family_class(const Rational& l, const Rational& m) {
  CanonicalClass c;
  c.label = Label::family;
  c.invariant = family_invariant(l, m);
  c.point = detail::normalize_point(l, m).first;
  return c;
}

/// Table entries: d1 = psi^{23}_1, d2 = psi^{13}_1 + psi^{23}_2,
/// d3 = psi^{12}_3 + psi^{13}_2 + psi^{23}_1, d(l:m) = l psi^{13}_1 +
/// psi^{23}_1 + m psi^{23}_2, abelian = 0.
inline Codifferential<Rational> canonical_lambda_mu(const Rational& l, const Rational& m) {
  if (l.is_zero() && m.is_zero()) throw Error(Errc::both_zero, "d(0:0) is not in the family");
  return Codifferential<Rational>(Coderivation<Rational>(2, detail::mat3({0, l, 1, 0, 0, m, 0, 0, 0})));
}

inline Codifferential<Rational> canonical(Label label) {
  using detail::mat3;
  switch (label) {
    case Label::abelian: return Codifferential<Rational>(Coderivation<Rational>(3, 2));
    case Label::d1: return Codifferential<Rational>(Coderivation<Rational>(2, mat3({0, 0, 1, 0, 0, 0, 0, 0, 0})));
    case Label::d2: return Codifferential<Rational>(Coderivation<Rational>(2, mat3({0, 1, 0, 0, 0, 1, 0, 0, 0})));
    case Label::d3: return Codifferential<Rational>(Coderivation<Rational>(2, mat3({0, 0, 1, 0, 1, 0, 1, 0, 0})));
    case Label::family: break;
  }
  throw Error(Errc::bad_label, "family members need a point (l:m)");
}

inline Codifferential<Rational> canonical(const CanonicalClass& c) {
  if (c.label != Label::family) return canonical(c.label);
  if (!c.point) throw Error(Errc::bad_label, "family class " + c.str() + " has no rational point");
  return canonical_lambda_mu(c.point->first, c.point->second);
}

inline Label parse_label(std::string_view name) {
  for (Label l : {Label::abelian, Label::d1, Label::d2, Label::d3, Label::family}) {
    if (label_name(l) == name) return l;
  }
  throw Error(Errc::bad_label, "unknown label '" + std::string(name) + "'");
}

/// [x, y] for coordinate vectors under the bracket with structure grid A.
inline std::vector<Rational> bracket_vectors(const Matrix<Rational>& a, const std::vector<Rational>& x,
                                             const std::vector<Rational>& y) {
  const unsigned n = static_cast<unsigned>(a.rows());
  std::vector<Rational> out(n, Rational(0));
  const auto ws = words(n, 2);
  for (std::size_t j = 0; j < ws.size(); ++j) {
    const unsigned u = ws[j][0] - 1, v = ws[j][1] - 1;
    const Rational c = x[u] * y[v] - x[v] * y[u];
    if (c.is_zero()) continue;
    for (unsigned i = 0; i < n; ++i) out[i] += c * a(i, j);
  }
  return out;
}

inline Matrix<Rational> ad_matrix(const Matrix<Rational>& a, const std::vector<Rational>& x) {
  const std::size_t n = a.rows();
  Matrix<Rational> m(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Rational> e(n, Rational(0));
    e[v] = Rational(1);
    m.set_column(v, bracket_vectors(a, x, e));
  }
  return m;
}

/// Killing form tr(ad x ad y).
inline Rational killing(const Matrix<Rational>& a, const std::vector<Rational>& x,
                        const std::vector<Rational>& y) {
  const Matrix<Rational> p = ad_matrix(a, x) * ad_matrix(a, y);
  Rational tr(0);
  for (std::size_t i = 0; i < p.rows(); ++i) tr += p(i, i);
  return tr;
}

struct Classification {
  CanonicalClass cls;
  /// Representative that the witness maps onto the input:
  /// verify_equiv(target, input, witness) holds.
  Codifferential<Rational> target;
  Matrix<Rational> witness;
  /// False when the target is an intermediate normal form rather than
  /// canonical(cls): d3 without rational square roots, or a family class
  /// with irrational eigenvalues (companion form).
  bool canonical_target = true;
  std::string note;
};

namespace detail {

using Vec = std::vector<Rational>;

inline Vec unit(std::size_t n, std::size_t i) {
  Vec v(n, Rational(0));
  v[i] = Rational(1);
  return v;
}

inline Vec combo(const Vec& a, const Rational& s, const Vec& b, const Rational& t) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i] + t * b[i];
  return out;
}

inline Matrix<Rational> diag3(const Rational& a, const Rational& b, const Rational& c) {
  return mat3({a, 0, 0, 0, b, 0, 0, 0, c});
}

inline Classification finish(const Codifferential<Rational>& d, const Matrix<Rational>& gb, CanonicalClass cls,
                             const Codifferential<Rational>& target, bool canonical_target, std::string note) {
  const Codifferential<Rational> moved = transport(d, gb);
  if (!(moved.body() == target.body())) {
    throw Error(Errc::internal, "classification witness does not reach " + cls.str());
  }
  Classification out{std::move(cls), target, *inverse(gb), canonical_target, std::move(note)};
  if (!verify_equiv(out.target, d, out.witness)) throw Error(Errc::internal, "witness fails verification");
  return out;
}

inline Classification classify_simple(const Codifferential<Rational>& d) {
  const Matrix<Rational>& a = d.body().grid();
  std::vector<Vec> hs = {unit(3, 0), unit(3, 1), unit(3, 2)};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) hs.push_back(combo(unit(3, i), 1, unit(3, j), 1));
  }
  hs.push_back(combo(combo(unit(3, 0), 1, unit(3, 1), 1), 1, unit(3, 2), 1));

  std::optional<std::pair<Matrix<Rational>, std::pair<Rational, Rational>>> first;
  for (const Vec& h : hs) {
    if (killing(a, h, h).is_zero()) continue;
    // W = h-perp for the Killing form
    Matrix<Rational> row(1, 3);
    for (std::size_t v = 0; v < 3; ++v) row(0, v) = killing(a, h, unit(3, v));
    const auto w = nullspace(row);
    const std::vector<Vec> ws = {w[0], w[1], combo(w[0], 1, w[1], 1), combo(w[0], 1, w[1], -1),
                                 combo(w[0], 1, w[1], 2), combo(w[0], 2, w[1], 1)};
    for (const Vec& x : ws) {
      const Vec f2 = bracket_vectors(a, x, h);
      const Vec f3 = bracket_vectors(a, x, f2);
      const Matrix<Rational> g = Matrix<Rational>::from_columns(3, {x, f2, f3});
      if (determinant(g).is_zero()) continue;
      const Matrix<Rational> m = transport(d, g).body().grid();
      // form [[0,0,mu],[0,lambda,0],[1,0,0]]
      const Rational lam = m(1, 1), mu = m(0, 2);
      if (!(m == mat3({0, 0, mu, 0, lam, 0, 1, 0, 0}))) {
        throw Error(Errc::internal, "unexpected normal form in the simple case");
      }
      auto r = lam.inverse().sqrt();
      auto s = mu.inverse().sqrt();
      if (r && s) {
        const Matrix<Rational> gb = g * diag3(*r, *s, *r * *s);
        return finish(d, gb, CanonicalClass{Label::d3, {}, {}}, canonical(Label::d3), true, "");
      }
      r = (-mu).inverse().sqrt();
      s = (-lam).inverse().sqrt();
      if (r && s) {
        const Matrix<Rational> swap = mat3({0, -1, 0, 1, 0, 0, 0, 0, 1});
        const Matrix<Rational> gb = g * swap * diag3(*r, *s, *r * *s);
        return finish(d, gb, CanonicalClass{Label::d3, {}, {}}, canonical(Label::d3), true, "");
      }
      if (!first) first.emplace(g, std::make_pair(lam, mu));
    }
  }
  if (!first) throw Error(Errc::internal, "no non-isotropic vector found in the simple case");
  const auto& [g, lm] = *first;
  const Codifferential<Rational> target(
      Coderivation<Rational>(2, mat3({0, 0, lm.second, 0, lm.first, 0, 1, 0, 0})));
  return finish(d, g, CanonicalClass{Label::d3, {}, {}}, target, false,
                "rational witness reaches [[0,0," + lm.second.str() + "],[0," + lm.first.str() +
                    ",0],[1,0,0]]; d3 certified by rank 3");
}

/// The block R of ad(f3) on an abelian ideal spanned by f1, f2, read off a
/// grid of the form [[0,R11,R12],[0,R21,R22],[0,0,0]].
inline Matrix<Rational> block_r(const Matrix<Rational>& m) {
  return Matrix<Rational>{{m(0, 1), m(0, 2)}, {m(1, 1), m(1, 2)}};
}

inline Matrix<Rational> embed(const Matrix<Rational>& p, const Rational& s) {
  return mat3({p(0, 0), p(0, 1), 0, p(1, 0), p(1, 1), 0, 0, 0, s});
}

inline Classification classify_solvable(const Codifferential<Rational>& d, std::size_t rk) {
  const Matrix<Rational>& a = d.body().grid();
  const Echelon ea = echelon(a);
  Vec w1, w2;
  if (rk == 2) {
    w1 = a.column(ea.pivots[0]);
    w2 = a.column(ea.pivots[1]);
  } else {
    w1 = a.column(ea.pivots[0]);
    SpanBuilder sb(3);
    sb.add(w1);
    for (const Vec& k : nullspace(ad_matrix(a, w1))) {
      if (sb.add(k)) {
        w2 = k;
        break;
      }
    }
    if (w2.empty()) throw Error(Errc::internal, "no abelian ideal through the derived algebra");
  }
  Vec c;
  {
    SpanBuilder sb(3);
    sb.add(w1);
    sb.add(w2);
    for (std::size_t i = 0; i < 3 && c.empty(); ++i) {
      if (!sb.contains(unit(3, i))) c = unit(3, i);
    }
  }
  const Matrix<Rational> g1 = Matrix<Rational>::from_columns(3, {w1, w2, c});
  const Matrix<Rational> m = transport(d, g1).body().grid();
  if (!(m(2, 0).is_zero() && m(2, 1).is_zero() && m(2, 2).is_zero() && m(0, 0).is_zero() && m(1, 0).is_zero())) {
    throw Error(Errc::internal, "ideal W is not abelian or not an ideal");
  }
  const Matrix<Rational> r = block_r(m);
  const Rational tr = r(0, 0) + r(1, 1);
  const Rational det = r(0, 0) * r(1, 1) - r(0, 1) * r(1, 0);
  const Rational disc = tr * tr - Rational(4) * det;
  const Matrix<Rational> id2 = Matrix<Rational>::identity(2);

  // a vector not fixed up to scalar by R: e1 or e2
  auto moved_vector = [&](const Matrix<Rational>& n) {
    for (std::size_t i = 0; i < 2; ++i) {
      const Vec e = unit(2, i);
      const auto ne = apply<Rational>(n, e);
      if (!(ne[0].is_zero() && ne[1].is_zero())) return std::make_pair(e, ne);
    }
    throw Error(Errc::internal, "R unexpectedly scalar");
  };

  if (tr.is_zero() && det.is_zero()) {
    // nilpotent, nonzero since rank >= 1
    const auto [v, rv] = moved_vector(r);
    const Matrix<Rational> p = Matrix<Rational>::from_columns(2, {rv, v});
    return finish(d, g1 * embed(p, 1), CanonicalClass{Label::d1, {}, {}}, canonical(Label::d1), true, "");
  }
  if (r(0, 1).is_zero() && r(1, 0).is_zero() && r(0, 0) == r(1, 1)) {
    return finish(d, g1 * embed(id2, r(0, 0).inverse()), CanonicalClass{Label::d2, {}, {}},
                  canonical(Label::d2), true, "");
  }
  if (disc.is_zero()) {
    const Rational ev = tr / Rational(2);
    const auto [v, nv] = moved_vector(r - id2 * ev);
    const Matrix<Rational> p = Matrix<Rational>::from_columns(2, {{nv[0] / ev, nv[1] / ev}, v});
    const CanonicalClass cls = family_class(1, 1);
    return finish(d, g1 * embed(p, ev.inverse()), cls, canonical(cls), true, "");
  }
  if (auto root = disc.sqrt()) {
    Rational e1 = (tr + *root) / Rational(2);
    Rational e2 = (tr - *root) / Rational(2);
    auto [pq, swapped] = normalize_point(e1, e2);
    if (swapped) std::swap(e1, e2);
    const auto eigvec = [&](const Rational& e) {
      const auto ns = nullspace(r - id2 * e);
      return ns.at(0);
    };
    const Vec u1 = eigvec(e1), u2 = eigvec(e2);
    const Rational pmq = (pq.first - pq.second).inverse();
    const Vec b2 = {u1[0] * pmq + u2[0], u1[1] * pmq + u2[1]};
    const Matrix<Rational> p = Matrix<Rational>::from_columns(2, {u1, b2});
    const Rational s = e1 / pq.first;
    CanonicalClass cls{Label::family, family_invariant_from_trace_det(tr, det), pq};
    return finish(d, g1 * embed(p, s.inverse()), cls, canonical(cls), true, "");
  }
  // irrational eigenvalues: companion basis (v, Rv)
  const auto [v, rv] = moved_vector(r);
  const Matrix<Rational> p = Matrix<Rational>::from_columns(2, {v, rv});
  const Rational s = tr.is_zero() ? Rational(1) : tr.inverse();
  // R in the basis (v, Rv) is [[0,-det],[1,tr]]; f3 is scaled by s
  const Codifferential<Rational> target(Coderivation<Rational>(
      2, mat3({0, 0, -det * s, 0, s, tr * s, 0, 0, 0})));
  CanonicalClass cls{Label::family, family_invariant_from_trace_det(tr, det), {}};
  return finish(d, g1 * embed(p, s), cls, target, false,
                "eigenvalues irrational over Q; witness reaches the companion form");
}

}  // namespace detail

/// Classification of a three-dimensional Lie algebra with a rational witness.
inline Classification classify(const Codifferential<Rational>& d) {
  if (d.dim() != 3) throw Error(Errc::unsupported_dim, "classification is implemented for N = 3");
  d.require_certified();
  const std::size_t rk = rank(d.body().grid());
  if (rk == 0) {
    return Classification{CanonicalClass{Label::abelian, {}, {}}, canonical(Label::abelian),
                          Matrix<Rational>::identity(3), true, ""};
  }
  if (rk == 3) return detail::classify_simple(d);
  return detail::classify_solvable(d, rk);
}

}  // namespace liedef
