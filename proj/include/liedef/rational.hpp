#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "liedef/errors.hpp"

namespace liedef {

/// Arbitrary-precision rational in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      q_ = mpq_class(mpz_class(static_cast<long>(value)));
    } else {
      q_ = mpq_class(mpz_class(static_cast<unsigned long>(value)));
    }
  }

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(Errc::division_by_zero, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  explicit Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) throw Error(Errc::division_by_zero, "rational with zero denominator");
    q_.canonicalize();
  }

  /// Accepts "p" or "p/q" with an optional leading '-' (ASCII or U+2212).
  static Rational parse(std::string_view text) {
    std::string s(text);
    bool negative = false;
    std::size_t pos = 0;
    if (s.rfind("\xE2\x88\x92", 0) == 0) {
      negative = true;
      pos = 3;
    } else if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
      negative = s[0] == '-';
      pos = 1;
    }
    auto digits = [&](std::size_t from, std::size_t to) {
      if (from >= to) return false;
      for (std::size_t i = from; i < to; ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
      }
      return true;
    };
    const std::size_t slash = s.find('/', pos);
    const std::size_t num_end = slash == std::string::npos ? s.size() : slash;
    if (!digits(pos, num_end) || (slash != std::string::npos && !digits(slash + 1, s.size()))) {
      throw Error(Errc::parse_error, "malformed rational literal '" + s + "'");
    }
    mpz_class num(s.substr(pos, num_end - pos), 10);
    mpz_class den(1);
    if (slash != std::string::npos) den = mpz_class(s.substr(slash + 1), 10);
    if (den == 0) throw Error(Errc::parse_error, "zero denominator in '" + s + "'");
    if (negative) num = -num;
    return Rational(num, den);
  }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  Rational inverse() const {
    if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
    return Rational(mpq_class(1) / q_);
  }

  /// Exact square root when this is the square of a rational.
  std::optional<Rational> sqrt() const {
    if (sign() < 0) return std::nullopt;
    if (mpz_perfect_square_p(q_.get_num_mpz_t()) == 0 ||
        mpz_perfect_square_p(q_.get_den_mpz_t()) == 0) {
      return std::nullopt;
    }
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q_.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q_.get_den_mpz_t());
    return Rational(n, d);
  }

  std::string str() const { return q_.get_str(10); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(Errc::division_by_zero, "rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

inline mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace liedef
