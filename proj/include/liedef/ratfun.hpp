#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "liedef/errors.hpp"
#include "liedef/multipoly.hpp"
#include "liedef/rational.hpp"

namespace liedef {

namespace detail {

// Single parameter shared by both polynomials, if that is all they use.
inline std::optional<Param> common_univariate(const MultiPoly& a, const MultiPoly& b) {
  std::set<Param> ps = a.parameters();
  for (const Param& p : b.parameters()) ps.insert(p);
  if (ps.size() != 1) return std::nullopt;
  return *ps.begin();
}

inline MultiPoly univariate_remainder(MultiPoly a, const MultiPoly& b) {
  const auto [lb, cb] = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const auto [la, ca] = a.leading();
    a -= MultiPoly::term(ca / cb, lb.cofactor_in(la)) * b;
  }
  return a;
}

inline MultiPoly univariate_gcd(MultiPoly a, MultiPoly b) {
  while (!b.is_zero()) {
    MultiPoly r = univariate_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace detail

/// Quotient of polynomials. Reduced by monomial content, constant
/// denominators, exact divisibility, and a full gcd in the univariate case;
/// the denominator's leading coefficient is 1.
class RatFun {
 public:
  RatFun() : num_(0), den_(1) {}
  template <std::integral I>
  RatFun(I c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(MultiPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  std::optional<MultiPoly> as_polynomial() const {
    if (!den_.is_constant()) return std::nullopt;
    return num_ * den_.constant_term().inverse();
  }

  Rational evaluate(const std::map<Param, Rational>& at) const {
    const Rational d = den_.evaluate(at);
    if (d.is_zero()) {
      throw Error(Errc::denominator_vanishes, "denominator " + den_.str() + " vanishes at sample");
    }
    return num_.evaluate(at) / d;
  }

  RatFun inverse() const {
    if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero rational function");
    return RatFun(den_, num_);
  }

  RatFun operator-() const {
    RatFun out = *this;
    out.num_ = -out.num_;
    return out;
  }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun{};
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string str() const {
    if (den_ == MultiPoly(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }
  std::string pretty() const {
    if (den_ == MultiPoly(1)) return num_.pretty();
    return "(" + num_.pretty() + ")/(" + den_.pretty() + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) {
      throw Error(Errc::denominator_vanishes, "rational function with zero denominator");
    }
    if (num_.is_zero()) {
      den_ = MultiPoly(1);
      return;
    }
    const Monomial g = Monomial::gcd(num_.monomial_content(), den_.monomial_content());
    if (!g.is_one()) {
      num_ = num_.divide_monomial(g);
      den_ = den_.divide_monomial(g);
    }
    if (!den_.is_constant()) {
      if (auto q = num_.exact_divide(den_)) {
        num_ = std::move(*q);
        den_ = MultiPoly(1);
      } else if (auto p = den_.exact_divide(num_)) {
        num_ = MultiPoly(1);
        den_ = std::move(*p);
      } else if (detail::common_univariate(num_, den_)) {
        const MultiPoly h = detail::univariate_gcd(num_, den_);
        if (!h.is_constant()) {
          num_ = *num_.exact_divide(h);
          den_ = *den_.exact_divide(h);
        }
      }
    }
    const Rational lead = den_.leading().second;
    if (!lead.is_one()) {
      const Rational s = lead.inverse();
      num_ = num_ * s;
      den_ = den_ * s;
    }
  }

  MultiPoly num_;
  MultiPoly den_;
};

/// Substitutes rational functions for parameters; parameters without an
/// entry in `assignment` are kept as themselves.
inline RatFun poly_substitute(const MultiPoly& p, const std::map<Param, RatFun>& assignment) {
  std::map<std::pair<Param, unsigned>, RatFun> powers;
  auto power = [&](Param v, unsigned e) -> const RatFun& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto a = assignment.find(v);
    RatFun base = a == assignment.end() ? RatFun(MultiPoly::variable(v)) : a->second;
    RatFun acc(1);
    for (unsigned k = 0; k < e; ++k) acc *= base;
    return powers.emplace(key, std::move(acc)).first->second;
  };
  RatFun sum;
  for (const auto& [m, c] : p.terms()) {
    RatFun termv(c);
    for (const auto& [v, e] : m.powers()) termv *= power(v, e);
    sum += termv;
  }
  return sum;
}

}  // namespace liedef
