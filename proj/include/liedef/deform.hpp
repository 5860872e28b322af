#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liedef/classify3.hpp"
#include "liedef/coderivation.hpp"
#include "liedef/cohomology.hpp"
#include "liedef/errors.hpp"
#include "liedef/multipoly.hpp"
#include "liedef/ratfun.hpp"

namespace liedef {

using Assignment = std::map<Param, Rational>;

template <class S>
Coderivation<S> lift(const Coderivation<Rational>& c) {
  return c.map<S>([](const Rational& v) { return S(v); });
}

/// d + delta_i t^i + gamma_j x^j, with the x^j either free or solved as
/// polynomials in the t^i.
struct DeformedCodifferential {
  Codifferential<Rational> base;
  std::vector<Coderivation<Rational>> deltas;  // H^2 prebasis, paired with t1, t2, ...
  std::vector<Coderivation<Rational>> gammas;  // P-part of L_2, paired with x1, x2, ...
  std::vector<MultiPoly> x_values;             // solved x^j; empty while unsolved

  std::size_t t_count() const { return deltas.size(); }
  bool solved() const { return x_values.size() == gammas.size(); }

  /// Body with the given polynomials in place of the x^j.
  Coderivation<MultiPoly> body_with(const std::vector<MultiPoly>& xs) const {
    Coderivation<MultiPoly> out = lift<MultiPoly>(base.body());
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      out += lift<MultiPoly>(deltas[i]) * MultiPoly::variable(tparam(static_cast<unsigned>(i + 1)));
    }
    for (std::size_t j = 0; j < gammas.size() && j < xs.size(); ++j) {
      if (!xs[j].is_zero()) out += lift<MultiPoly>(gammas[j]) * xs[j];
    }
    return out;
  }

  /// Body with free x^j.
  Coderivation<MultiPoly> symbolic() const {
    std::vector<MultiPoly> xs;
    for (std::size_t j = 0; j < gammas.size(); ++j) {
      xs.push_back(MultiPoly::variable(xparam(static_cast<unsigned>(j + 1))));
    }
    return body_with(xs);
  }

  /// Body with the solved x^j (or x = 0 before solving).
  Coderivation<MultiPoly> body() const { return body_with(x_values); }

  Coderivation<Rational> evaluate(const Assignment& at) const {
    return body().map<Rational>([&](const MultiPoly& p) { return p.evaluate(at); });
  }

  Coderivation<RatFun> substitute(const std::map<Param, RatFun>& assignment) const {
    return body().map<RatFun>([&](const MultiPoly& p) { return poly_substitute(p, assignment); });
  }

  /// Value at t = 0 (the augmentation); equals base.
  Coderivation<Rational> augmentation() const {
    Assignment zero;
    for (std::size_t i = 0; i < deltas.size(); ++i) zero[tparam(static_cast<unsigned>(i + 1))] = Rational(0);
    return evaluate(zero);
  }
};

/// d^1 = d + delta_i t^i over an H^2 prebasis (the computed one unless overridden).
inline DeformedCodifferential infinitesimal(
    const Codifferential<Rational>& d,
    const std::optional<std::vector<Coderivation<Rational>>>& h2 = std::nullopt) {
  const Splitting s = splitting(d, 2, h2);
  return DeformedCodifferential{d, s.h, {}, {}};
}

/// Coordinates of xi in the basis (alpha, beta, tau) of L_3.
struct Decomposition {
  std::vector<MultiPoly> r;  // alpha coefficients
  std::vector<MultiPoly> s;  // beta coefficients
  std::vector<MultiPoly> y;  // tau coefficients
};

inline Decomposition bracket_decompose(const Coderivation<MultiPoly>& xi, const Splitting& split) {
  const std::size_t dim_l = xi.size();
  std::vector<std::vector<Rational>> cols;
  for (const auto* part : {&split.h, &split.b, &split.p}) {
    for (const auto& c : *part) cols.push_back(c.flatten());
  }
  if (cols.size() != dim_l) {
    throw Error(Errc::split_not_spanning, "splitting has " + std::to_string(cols.size()) +
                                              " vectors for a space of dimension " + std::to_string(dim_l));
  }
  Decomposition out;
  if (dim_l == 0) return out;
  const auto inv = inverse(Matrix<Rational>::from_columns(dim_l, cols));
  if (!inv) throw Error(Errc::split_not_spanning, "splitting vectors are dependent");
  const auto flat = xi.flatten();
  std::vector<MultiPoly> coords(dim_l);
  for (std::size_t r = 0; r < dim_l; ++r) {
    for (std::size_t c = 0; c < dim_l; ++c) {
      if (!(*inv)(r, c).is_zero() && !flat[c].is_zero()) coords[r] += flat[c] * (*inv)(r, c);
    }
  }
  std::size_t k = 0;
  for (std::size_t i = 0; i < split.h.size(); ++i) out.r.push_back(coords[k++]);
  for (std::size_t i = 0; i < split.b.size(); ++i) out.s.push_back(coords[k++]);
  for (std::size_t i = 0; i < split.p.size(); ++i) out.y.push_back(coords[k++]);
  return out;
}

struct MiniversalResult {
  explicit MiniversalResult(DeformedCodifferential def) : deformation(std::move(def)) {}

  DeformedCodifferential deformation;  // x^j solved
  std::vector<Coderivation<Rational>> alphas;
  std::vector<MultiPoly> r_coeffs;    // [d^inf, d^inf] = alpha_i r_coeffs[i] (+ beta, tau parts)
  std::vector<MultiPoly> relations;   // nonzero r_coeffs, primitive
  std::vector<MultiPoly> s_residual;  // beta coefficients after solving
  std::vector<MultiPoly> y_residual;  // tau coefficients after solving
  Coderivation<MultiPoly> bracket;    // [d^inf, d^inf]
  bool exact = false;
  unsigned truncation_degree = 0;
  unsigned iterations = 0;

  bool rigid() const { return deformation.deltas.empty(); }
};

struct PrebasisFixture {
  std::optional<std::vector<Coderivation<Rational>>> h2;
  std::optional<std::vector<Coderivation<Rational>>> h3;
};

namespace detail {

inline bool all_zero(const std::vector<MultiPoly>& v) {
  for (const auto& p : v) {
    if (!p.is_zero()) return false;
  }
  return true;
}

}  // namespace detail

/// Solves s^j = 0 for the x^j order by order: with e = delta t + gamma x,
/// [d^inf, d^inf] = 2 beta_j x^j + [e, e], so x = -1/2 s([e, e]) is iterated
/// from x = 0, each pass fixing one more degree.
inline MiniversalResult miniversal(const Codifferential<Rational>& d, unsigned truncation_degree,
                                   const PrebasisFixture& fixture = {}) {
  if (truncation_degree < 2) {
    throw Error(Errc::truncation_too_small,
                "truncation degree " + std::to_string(truncation_degree) + " is below 2");
  }
  d.require_certified();
  const unsigned kmax = std::min(3u, d.dim());
  const CoboundaryComplex cx(d, kmax);
  const Splitting s2 = cx.splitting(2, fixture.h2);
  const Splitting s3 = d.dim() >= 3 ? cx.splitting(3, fixture.h3) : Splitting{3, {}, {}, {}};

  MiniversalResult out(DeformedCodifferential{d, s2.h, s2.p, {}});
  out.truncation_degree = truncation_degree;
  out.alphas = s3.h;
  const DeformedCodifferential& def = out.deformation;
  const Coderivation<MultiPoly> d_lift = lift<MultiPoly>(d.body());

  auto e_part = [&](const std::vector<MultiPoly>& xs) { return def.body_with(xs) - d_lift; };
  auto decompose_ee = [&](const std::vector<MultiPoly>& xs) {
    const auto e = e_part(xs);
    return bracket_decompose(bracket(e, e), s3);
  };
  const Rational minus_half(mpz_class(-1), mpz_class(2));
  auto next_x = [&](const std::vector<MultiPoly>& xs, std::optional<unsigned> degree) {
    const Decomposition dec = decompose_ee(xs);
    std::vector<MultiPoly> nx;
    for (std::size_t j = 0; j < def.gammas.size(); ++j) {
      MultiPoly v = dec.s.at(j) * minus_half;
      nx.push_back(degree ? v.truncate(*degree) : v);
    }
    return nx;
  };

  std::vector<MultiPoly> x(def.gammas.size());
  bool stable = false;
  for (unsigned it = 0; it <= truncation_degree; ++it) {
    auto nx = next_x(x, truncation_degree);
    ++out.iterations;
    if (nx == x) {
      stable = true;
      break;
    }
    x = std::move(nx);
  }
  out.deformation.x_values = x;

  const Coderivation<MultiPoly> full = out.deformation.body();
  out.bracket = bracket(full, full);
  const Decomposition dec = bracket_decompose(out.bracket, s3);
  out.r_coeffs = dec.r;
  out.s_residual = dec.s;
  out.y_residual = dec.y;
  // Exact when the untruncated step reproduces x and nothing but alpha parts remain.
  out.exact = stable && next_x(x, std::nullopt) == x && detail::all_zero(dec.s) && detail::all_zero(dec.y);
  if (!out.exact) {
    for (const auto& s : dec.s) {
      if (!s.truncate(truncation_degree).is_zero()) {
        throw Error(Errc::internal, "s-coefficients do not vanish to the truncation degree");
      }
    }
    for (auto& r : out.r_coeffs) r = r.truncate(truncation_degree);
  }
  for (const auto& r : out.r_coeffs) {
    if (!r.is_zero()) out.relations.push_back(r.primitive());
  }
  return out;
}

/// A solution family of the relations, given by substitutions for some of
/// the t^i in terms of the remaining ones.
struct Branch {
  std::string name;
  std::map<Param, RatFun> assignment;
};

inline void check_branch(const MiniversalResult& mv, const Branch& branch) {
  for (const auto& r : mv.relations) {
    const RatFun v = poly_substitute(r, branch.assignment);
    if (!v.is_zero()) {
      throw Error(Errc::relation_violated,
                  "branch " + branch.name + " leaves relation " + r.str() + " = " + v.str());
    }
  }
}

struct BranchSample {
  Assignment sample;  // values of the free parameters
  Assignment point;   // all t^i
  Coderivation<Rational> value;
  Classification classification;
};

/// Values of every t^i on the branch at a sample of its free parameters.
inline Assignment branch_point(const MiniversalResult& mv, const Branch& branch, const Assignment& sample) {
  Assignment point;
  for (std::size_t i = 1; i <= mv.deformation.t_count(); ++i) {
    const Param p = tparam(static_cast<unsigned>(i));
    auto it = branch.assignment.find(p);
    if (it != branch.assignment.end()) {
      point[p] = it->second.evaluate(sample);
    } else {
      auto s = sample.find(p);
      if (s == sample.end()) {
        throw Error(Errc::out_of_range, "sample gives no value for free parameter " + p.name());
      }
      point[p] = s->second;
    }
  }
  return point;
}

inline std::vector<BranchSample> analyze_branch(const MiniversalResult& mv, const Branch& branch,
                                                const std::vector<Assignment>& samples) {
  check_branch(mv, branch);
  std::vector<BranchSample> out;
  for (const Assignment& sample : samples) {
    Assignment point = branch_point(mv, branch, sample);
    Coderivation<Rational> value = mv.deformation.evaluate(point);
    Classification c = classify(Codifferential<Rational>(value));
    out.push_back(BranchSample{sample, std::move(point), std::move(value), std::move(c)});
  }
  return out;
}

}  // namespace liedef
