#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liedef/errors.hpp"
#include "liedef/rational.hpp"

namespace liedef {

/// A deformation parameter: t^i (base coordinates) or x^i (coboundary
/// corrections). All t's order before all x's.
struct Param {
  enum class Family : std::uint8_t { t = 0, x = 1 };

  Family family = Family::t;
  unsigned index = 1;

  friend auto operator<=>(const Param&, const Param&) = default;

  std::string name() const {
    return (family == Family::t ? "t" : "x") + std::to_string(index);
  }
  std::string pretty() const {
    return (family == Family::t ? "t^" : "x^") + std::to_string(index);
  }

  static Param parse(std::string_view text) {
    if (text.size() < 2 || (text[0] != 't' && text[0] != 'x')) {
      throw Error(Errc::parse_error, "bad parameter name '" + std::string(text) + "'");
    }
    unsigned idx = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9') {
        throw Error(Errc::parse_error, "bad parameter name '" + std::string(text) + "'");
      }
      idx = idx * 10 + static_cast<unsigned>(text[i] - '0');
    }
    if (idx == 0) throw Error(Errc::parse_error, "parameter indices start at 1");
    return Param{text[0] == 't' ? Family::t : Family::x, idx};
  }
};

inline Param tparam(unsigned i) { return Param{Param::Family::t, i}; }
inline Param xparam(unsigned i) { return Param{Param::Family::x, i}; }

/// Sparse power product; powers sorted by parameter, no zero exponents.
class Monomial {
 public:
  using Power = std::pair<Param, unsigned>;

  Monomial() = default;
  explicit Monomial(Param p, unsigned exponent = 1) {
    if (exponent > 0) powers_.emplace_back(p, exponent);
  }

  static Monomial from_powers(std::vector<Power> powers) {
    std::sort(powers.begin(), powers.end(),
              [](const Power& a, const Power& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [p, e] : powers) {
      if (e == 0) continue;
      if (!m.powers_.empty() && m.powers_.back().first == p) {
        m.powers_.back().second += e;
      } else {
        m.powers_.emplace_back(p, e);
      }
    }
    return m;
  }

  const std::vector<Power>& powers() const { return powers_; }
  bool is_one() const { return powers_.empty(); }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& pw : powers_) d += pw.second;
    return d;
  }

  unsigned exponent(Param p) const {
    for (const auto& [q, e] : powers_) {
      if (q == p) return e;
    }
    return 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto i = a.powers_.begin();
    auto j = b.powers_.begin();
    while (i != a.powers_.end() || j != b.powers_.end()) {
      if (j == b.powers_.end() || (i != a.powers_.end() && i->first < j->first)) {
        out.powers_.push_back(*i++);
      } else if (i == a.powers_.end() || j->first < i->first) {
        out.powers_.push_back(*j++);
      } else {
        out.powers_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    return out;
  }

  bool divides(const Monomial& other) const {
    return std::all_of(powers_.begin(), powers_.end(),
                       [&](const Power& pw) { return other.exponent(pw.first) >= pw.second; });
  }

  /// Quotient other / *this; requires divides(other).
  Monomial cofactor_in(const Monomial& other) const {
    std::vector<Power> out;
    for (const auto& [p, e] : other.powers_) out.emplace_back(p, e - exponent(p));
    return from_powers(std::move(out));
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    std::vector<Power> out;
    for (const auto& [p, e] : a.powers_) out.emplace_back(p, std::min(e, b.exponent(p)));
    return from_powers(std::move(out));
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string str() const {
    std::string s;
    for (const auto& [p, e] : powers_) {
      if (!s.empty()) s += "*";
      s += p.name();
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

  std::string pretty() const {
    std::string s;
    for (const auto& [p, e] : powers_) {
      if (e > 1) {
        s += "(" + p.pretty() + ")^" + std::to_string(e);
      } else {
        s += p.pretty();
      }
    }
    return s;
  }

 private:
  std::vector<Power> powers_;
};

/// Storage and printing order: ascending total degree, then the monomial
/// with the larger exponent on the earliest parameter (t1 before t2 ...
/// before x1) first.
struct PrintOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db) return da < db;
    const auto& pa = a.powers();
    const auto& pb = b.powers();
    std::size_t i = 0, j = 0;
    while (i < pa.size() || j < pb.size()) {
      Param p;
      if (j == pb.size() || (i < pa.size() && pa[i].first < pb[j].first)) {
        p = pa[i].first;
      } else {
        p = pb[j].first;
      }
      const unsigned ea = (i < pa.size() && pa[i].first == p) ? pa[i++].second : 0;
      const unsigned eb = (j < pb.size() && pb[j].first == p) ? pb[j++].second : 0;
      if (ea != eb) return ea > eb;
    }
    return false;
  }
};

/// Multivariate polynomial with rational coefficients in t/x parameters.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational, PrintOrder>;

  MultiPoly() = default;
  template <std::integral I>
  MultiPoly(I c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(const Rational& c) {              // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
  }

  static MultiPoly variable(Param p) { return term(Rational(1), Monomial(p)); }

  static MultiPoly term(const Rational& c, const Monomial& m) {
    MultiPoly out;
    if (!c.is_zero()) out.terms_.emplace(m, c);
    return out;
  }

  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }

  Rational constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  unsigned degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

  /// Lowest total degree among the terms (0 for the zero polynomial).
  unsigned order() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

  std::set<Param> parameters() const {
    std::set<Param> out;
    for (const auto& [m, c] : terms_) {
      for (const auto& pw : m.powers()) out.insert(pw.first);
    }
    return out;
  }

  /// Drops every term of total degree above `degree`.
  MultiPoly truncate(unsigned degree) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
      if (m.degree() <= degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
    return out;
  }

  Rational evaluate(const std::map<Param, Rational>& at) const {
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
      Rational v = c;
      for (const auto& [p, e] : m.powers()) {
        auto it = at.find(p);
        if (it == at.end()) {
          throw Error(Errc::out_of_range, "no value supplied for parameter " + p.name());
        }
        for (unsigned k = 0; k < e; ++k) v *= it->second;
      }
      sum += v;
    }
    return sum;
  }

  /// Leading term for graded lexicographic order with t1 > t2 > ... > x1.
  std::pair<Monomial, Rational> leading() const {
    if (terms_.empty()) throw Error(Errc::internal, "leading term of zero polynomial");
    const unsigned top = degree();
    for (const auto& [m, c] : terms_) {
      if (m.degree() == top) return {m, c};
    }
    return *terms_.rbegin();
  }

  /// Quotient when `divisor` divides *this exactly, otherwise nullopt.
  std::optional<MultiPoly> exact_divide(const MultiPoly& divisor) const {
    if (divisor.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
    const auto [lm, lc] = divisor.leading();
    MultiPoly rem = *this;
    MultiPoly quot;
    while (!rem.is_zero()) {
      const auto [rm, rc] = rem.leading();
      if (!lm.divides(rm)) return std::nullopt;
      const MultiPoly step = term(rc / lc, lm.cofactor_in(rm));
      quot += step;
      rem -= step * divisor;
    }
    return quot;
  }

  /// Greatest common divisor of the monomials of all terms.
  Monomial monomial_content() const {
    if (terms_.empty()) return Monomial{};
    Monomial g = terms_.begin()->first;
    for (const auto& [m, c] : terms_) g = Monomial::gcd(g, m);
    return g;
  }

  MultiPoly divide_monomial(const Monomial& m) const {
    MultiPoly out;
    for (const auto& [mm, c] : terms_) out.terms_.emplace(m.cofactor_in(mm), c);
    return out;
  }

  /// gcd of numerators over lcm of denominators; positive.
  Rational content() const {
    if (terms_.empty()) return Rational(0);
    mpz_class num(0), den(1);
    for (const auto& [m, c] : terms_) {
      num = gcd(num, c.numerator());
      den = lcm(den, c.denominator());
    }
    return Rational(num, den);
  }

  /// Integer coefficients with gcd 1 and a positive first printed term.
  MultiPoly primitive() const {
    if (terms_.empty()) return *this;
    Rational scale = content().inverse();
    if (terms_.begin()->second.sign() < 0) scale = -scale;
    return *this * scale;
  }

  MultiPoly operator-() const {
    MultiPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
  }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) {
    if (s.is_zero()) return MultiPoly{};
    for (auto& [m, c] : a.terms_) c *= s;
    return a;
  }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return std::move(a) * s; }
  template <std::integral I>
  friend MultiPoly operator*(MultiPoly a, I s) { return std::move(a) * Rational(s); }
  template <std::integral I>
  friend MultiPoly operator*(I s, MultiPoly a) { return std::move(a) * Rational(s); }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  /// Machine form: "1+t1", "t1*t5-t2*t3", "-1/2*t1^2".
  std::string str() const { return render(false); }
  /// Display form: "1+t^1", "t^1t^5-t^2t^3", "(t^1)^2".
  std::string pretty() const { return render(true); }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::string render(bool pretty) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string piece;
      if (m.is_one()) {
        piece = c.str();
      } else {
        const std::string mono = pretty ? m.pretty() : m.str();
        if (c.is_one()) {
          piece = mono;
        } else if (c == Rational(-1)) {
          piece = "-" + mono;
        } else if (pretty) {
          piece = c.is_integer() ? c.str() + mono : "(" + c.str() + ")" + mono;
        } else {
          piece = c.str() + "*" + mono;
        }
      }
      if (!first && piece[0] != '-') out += "+";
      out += piece;
      first = false;
    }
    return out;
  }

  Terms terms_;
};

inline MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
inline MultiPoly poly_sub(const MultiPoly& a, const MultiPoly& b) { return a - b; }
inline MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
inline MultiPoly poly_truncate(const MultiPoly& p, unsigned degree) { return p.truncate(degree); }

}  // namespace liedef
