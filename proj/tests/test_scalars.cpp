#include <catch_amalgamated.hpp>

#include <random>

#include "liedef/multipoly.hpp"
#include "liedef/ratfun.hpp"
#include "liedef/rational.hpp"

using namespace liedef;

namespace {

MultiPoly t(unsigned i) { return MultiPoly::variable(tparam(i)); }

MultiPoly random_poly(std::mt19937& rng, unsigned vars, unsigned max_terms) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<unsigned> exp(0, 2);
  std::uniform_int_distribution<unsigned> count(0, max_terms);
  MultiPoly p;
  const unsigned n = count(rng);
  for (unsigned k = 0; k < n; ++k) {
    std::vector<Monomial::Power> powers;
    for (unsigned v = 1; v <= vars; ++v) powers.emplace_back(tparam(v), exp(rng));
    p += MultiPoly::term(Rational(coeff(rng)), Monomial::from_powers(powers));
  }
  return p;
}

}  // namespace

TEST_CASE("rational normalization", "[scalars]") {
  const Rational q(mpz_class(2), mpz_class(-4));
  CHECK(q.numerator() == -1);
  CHECK(q.denominator() == 2);
  CHECK(Rational::parse("-6/8") == Rational(mpz_class(-3), mpz_class(4)));
  CHECK(Rational::parse("\xE2\x88\x92" "3").str() == "-3");
  CHECK(Rational::parse("+7/1").str() == "7");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("abc"), Error);
  CHECK_THROWS_AS(Rational::parse("1.5"), Error);
  CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), Error);
  CHECK_THROWS_AS(Rational(0).inverse(), Error);
  CHECK(Rational::parse("9/4").sqrt() == Rational(mpz_class(3), mpz_class(2)));
  CHECK_FALSE(Rational(2).sqrt().has_value());
  CHECK_FALSE(Rational(-4).sqrt().has_value());
  CHECK(Rational(-3).abs() == Rational(3));
  CHECK(Rational(1) / Rational(3) + Rational(1) / Rational(6) == Rational(mpz_class(1), mpz_class(2)));
}

TEST_CASE("poly_arith examples", "[scalars]") {
  CHECK((t(1) * t(2)).str() == "t1*t2");
  CHECK(((t(1) + t(2)) * (t(1) - t(2))) == t(1) * t(1) - t(2) * t(2));
  CHECK(((t(1) * t(4) + t(3) * t(5)) + (-(t(1) * t(4)))) == t(3) * t(5));
  CHECK(poly_add(t(1), t(1)) == 2 * t(1));
  CHECK(poly_sub(t(1), t(1)).is_zero());
  CHECK(poly_mul(t(1), MultiPoly(0)).is_zero());
}

TEST_CASE("printing order", "[scalars]") {
  CHECK((t(1) + 1).str() == "1+t1");
  CHECK((t(3) * t(5) + t(1) * t(4)).str() == "t1*t4+t3*t5");
  CHECK((t(2) * t(3) * -1 + t(1) * t(5)).str() == "t1*t5-t2*t3");
  CHECK((t(1) * t(1) * 2 - Rational(mpz_class(1), mpz_class(2)) * t(2)).str() == "-1/2*t2+2*t1^2");
  CHECK((t(1) * t(1)).pretty() == "(t^1)^2");
  CHECK((t(1) * t(4)).pretty() == "t^1t^4");
  CHECK(MultiPoly(0).str() == "0");
  CHECK((MultiPoly::variable(xparam(1)) + t(2)).str() == "t2+x1");
}

TEST_CASE("poly_truncate examples", "[scalars]") {
  CHECK(poly_truncate(t(1) + t(1) * t(1) * t(1), 2) == t(1));
  CHECK(poly_truncate(t(1) * t(2), 1).is_zero());
  const MultiPoly sq = (1 + t(1)) * (1 + t(1));
  CHECK(poly_truncate(sq, 1) == 1 + 2 * t(1));
  CHECK(sq.degree() == 2);
  CHECK(sq.order() == 0);
}

TEST_CASE("poly_substitute examples", "[scalars]") {
  std::map<Param, RatFun> a{{tparam(1), RatFun(0)}, {tparam(2), RatFun(1)}};
  CHECK(poly_substitute(t(1) * t(2), a).is_zero());

  std::map<Param, RatFun> b{{tparam(5), RatFun(-(t(1) * t(4)), t(3))}};
  CHECK(poly_substitute(t(1) * t(4) + t(3) * t(5), b).is_zero());

  std::map<Param, RatFun> c{{tparam(1), RatFun(5)}, {tparam(2), RatFun(1)}, {tparam(3), RatFun(6)}};
  CHECK(poly_substitute(t(1) * t(1) - 4 * t(2) * t(3), c) == RatFun(1));
}

TEST_CASE("ratfun reduction", "[scalars]") {
  const RatFun a(t(1) * t(1) - 1, t(1) - 1);
  REQUIRE(a.is_polynomial());
  CHECK(*a.as_polynomial() == t(1) + 1);
  const RatFun b(2 * t(1) * t(4), 4 * t(1) * t(3));
  CHECK(b.num() == t(4) * Rational(mpz_class(1), mpz_class(2)));
  CHECK(b.den() == t(3));
  CHECK(RatFun(t(1), t(2)) * RatFun(t(2), t(1)) == RatFun(1));
  CHECK_THROWS_AS(RatFun(t(1), MultiPoly(0)), Error);
  CHECK_THROWS_AS(RatFun(1, t(1)).evaluate({{tparam(1), Rational(0)}}), Error);
  CHECK(RatFun(1, t(1)).evaluate({{tparam(1), Rational(4)}}) == Rational(mpz_class(1), mpz_class(4)));
  CHECK_THROWS_AS(poly_substitute(t(1), {{tparam(1), RatFun(1) / RatFun(0)}}), Error);
}

TEST_CASE("exact division and content", "[scalars]") {
  const MultiPoly p = (t(1) + t(2)) * (t(1) * t(3) - 2);
  CHECK(*p.exact_divide(t(1) + t(2)) == t(1) * t(3) - 2);
  CHECK_FALSE((t(1) + 1).exact_divide(t(2)).has_value());
  CHECK((6 * t(1) - 4 * t(2)).primitive() == 3 * t(1) - 2 * t(2));
  CHECK((-6 * t(1) + 4 * t(2)).primitive() == 3 * t(1) - 2 * t(2));
  CHECK((t(1) * t(1) * t(2) + t(1) * t(2) * t(3)).monomial_content() ==
        Monomial::from_powers({{tparam(1), 1}, {tparam(2), 1}}));
}

TEST_CASE("ring axioms on random polynomials", "[scalars][property]") {
  std::mt19937 rng(20261019);
  for (int iter = 0; iter < 60; ++iter) {
    const MultiPoly a = random_poly(rng, 3, 4);
    const MultiPoly b = random_poly(rng, 3, 4);
    const MultiPoly c = random_poly(rng, 3, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("substitution is a ring homomorphism", "[scalars][property]") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 30; ++iter) {
    const MultiPoly p = random_poly(rng, 3, 3);
    const MultiPoly q = random_poly(rng, 3, 3);
    std::map<Param, RatFun> a{{tparam(1), RatFun(t(2) + 1, t(3))},
                              {tparam(2), RatFun(t(3) * 2)},
                              {tparam(3), RatFun(t(1) - t(2))}};
    CHECK(poly_substitute(p * q, a) == poly_substitute(p, a) * poly_substitute(q, a));
    CHECK(poly_substitute(p + q, a) == poly_substitute(p, a) + poly_substitute(q, a));
  }
}
