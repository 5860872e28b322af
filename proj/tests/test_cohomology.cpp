#include <catch_amalgamated.hpp>

#include <random>

#include "liedef/classify3.hpp"
#include "liedef/cohomology.hpp"
#include "liedef/fixtures.hpp"

using namespace liedef;

namespace {

using C = Coderivation<Rational>;
using M = Matrix<Rational>;
using D = Codifferential<Rational>;

D cod(M a) { return D(C(2, std::move(a))); }

C psi(std::initializer_list<unsigned> w, unsigned target) { return C::basis(3, MultiIndex(w), target); }

M random_invertible(std::mt19937& rng, unsigned n = 3) {
  std::uniform_int_distribution<int> e(-3, 3);
  while (true) {
    M g(n, n);
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) g(i, j) = Rational(e(rng));
    }
    if (!determinant(g).is_zero()) return g;
  }
}

std::vector<Rational> unit(unsigned n, unsigned i) {
  std::vector<Rational> v(n, Rational(0));
  v[i] = Rational(1);
  return v;
}

// Center and derivations straight from the bracket on V, without coderivations:
// H^0 = center, H^1 = Der / ad(V).
std::pair<std::size_t, std::size_t> h0_h1_oracle(const D& d) {
  const M& a = d.body().grid();
  const unsigned n = d.dim();
  // c[x][y][k] = coefficient of f_k in [f_x, f_y]
  std::vector<std::vector<std::vector<Rational>>> c(n, std::vector<std::vector<Rational>>(n));
  for (unsigned x = 0; x < n; ++x) {
    for (unsigned y = 0; y < n; ++y) c[x][y] = bracket_vectors(a, unit(n, x), unit(n, y));
  }
  M ad(n * n, n);
  for (unsigned x = 0; x < n; ++x) {
    for (unsigned y = 0; y < n; ++y) {
      for (unsigned k = 0; k < n; ++k) ad(y * n + k, x) = c[x][y][k];
    }
  }
  const std::size_t center = n - rank(ad);

  // Unknown D(p, q) = coefficient of f_p in D f_q at column q * n + p.
  M eq(n * n * n, n * n);
  std::size_t row = 0;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      for (unsigned out = 0; out < n; ++out, ++row) {
        for (unsigned k = 0; k < n; ++k) eq(row, k * n + out) += c[i][j][k];
        for (unsigned p = 0; p < n; ++p) {
          eq(row, i * n + p) -= c[p][j][out];
          eq(row, j * n + p) -= c[i][p][out];
        }
      }
    }
  }
  const std::size_t der = n * n - rank(eq);
  return {center, der - (n - center)};
}

bool in_span(const std::vector<C>& basis, const C& v) {
  std::vector<std::vector<Rational>> cols;
  for (const auto& b : basis) cols.push_back(b.flatten());
  const std::size_t dim = v.size();
  if (cols.empty()) return v.is_zero();
  const std::size_t r = rank(M::from_columns(dim, cols));
  cols.push_back(v.flatten());
  return rank(M::from_columns(dim, cols)) == r;
}

void check_complex(const D& d) {
  const CoboundaryComplex cx(d, d.dim());
  for (unsigned k = 0; k + 1 <= d.dim(); ++k) {
    INFO("k=" << k);
    const M dd = cx.matrix(k + 1) * cx.matrix(k);
    CHECK(dd == M(dd.rows(), dd.cols()));
  }
}

}  // namespace

TEST_CASE("cohomology reproduces the table for the seven canonical algebras", "[cohomology]") {
  for (const auto& row : fixtures::cohomology_table()) {
    INFO(row.name);
    const auto rep = cohomology_report(fixtures::lookup(row.name).d, 3);
    CHECK(rep.h(1) == row.h1);
    CHECK(rep.h(2) == row.h2);
    CHECK(rep.h(3) == row.h3);
  }
}

TEST_CASE("abelian algebra: zero coboundary", "[cohomology]") {
  const auto rep = cohomology_report(canonical(Label::abelian), 3);
  CHECK(rep.h(0) == 3);
  CHECK(rep.h(1) == 9);
  CHECK(rep.h(2) == 9);
  CHECK(rep.h(3) == 3);
  for (unsigned k = 0; k <= 3; ++k) CHECK(rep.degrees[k].rank_d == 0);
}

TEST_CASE("d1: D_0 has rank 2", "[cohomology]") {
  const CoboundaryComplex cx(fixtures::d1().d, 3);
  CHECK(cx.degree_data(0).rank_d == 2);
  CHECK(cx.degree_data(0).dim_h == 1);
  CHECK(cx.degree_data(1).dim_l == 9);
  CHECK(cx.degree_data(2).dim_l == 9);
  CHECK(cx.degree_data(3).dim_l == 3);
}

TEST_CASE("D^2 = 0 on catalog entries and transported variants", "[cohomology][property]") {
  for (const auto& name : fixtures::names()) {
    INFO(name);
    check_complex(fixtures::lookup(name).d);
  }
  std::mt19937 rng(50);
  const auto names = fixtures::names();
  for (int trial = 0; trial < 50; ++trial) {
    const D base = fixtures::lookup(names[trial % names.size()]).d;
    const D moved = transport(base, random_invertible(rng));
    INFO("trial " << trial);
    check_complex(moved);
  }
}

TEST_CASE("rank-nullity and Euler characteristic", "[cohomology][property]") {
  for (const auto& name : fixtures::names()) {
    INFO(name);
    const auto rep = cohomology_report(fixtures::lookup(name).d, 3);
    long euler = 0;
    for (unsigned k = 0; k <= 3; ++k) {
      const auto& dd = rep.degrees[k];
      CHECK(dd.dim_ker + dd.rank_d == dd.dim_l);
      euler += (k % 2 ? -1 : 1) * static_cast<long>(dd.dim_h);
    }
    // sum (-1)^k dim L_k = 3 (1 - 3 + 3 - 1) = 0
    CHECK(euler == 0);
  }
}

TEST_CASE("H^0 and H^1 agree with center and outer derivations", "[cohomology][oracle]") {
  std::mt19937 rng(11);
  std::vector<D> algebras;
  for (const auto& name : fixtures::names()) algebras.push_back(fixtures::lookup(name).d);
  for (int i = 0; i < 16; ++i) algebras.push_back(transport(algebras[i % 8], random_invertible(rng)));
  // sl2 + a central direction, and the 4-dim algebra [f1,f2]=f3 (Heisenberg) + f4 central
  C sl2r(4, 2);
  sl2r.coeff(3, MultiIndex{1, 2}) = Rational(1);
  sl2r.coeff(2, MultiIndex{1, 3}) = Rational(1);
  sl2r.coeff(1, MultiIndex{2, 3}) = Rational(1);
  algebras.emplace_back(sl2r);
  C heis(4, 2);
  heis.coeff(3, MultiIndex{1, 2}) = Rational(1);
  algebras.emplace_back(heis);
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    INFO("algebra " << i);
    REQUIRE(algebras[i].certified());
    const auto [h0, h1] = h0_h1_oracle(algebras[i]);
    const auto rep = cohomology_report(algebras[i], 1);
    CHECK(rep.h(0) == h0);
    CHECK(rep.h(1) == h1);
  }
}

TEST_CASE("splittings span L_k and have the right parts", "[cohomology]") {
  for (const auto& name : fixtures::names()) {
    const CoboundaryComplex cx(fixtures::lookup(name).d, 3);
    for (unsigned k = 0; k <= 3; ++k) {
      INFO(name << " k=" << k);
      const Splitting s = cx.splitting(k);
      const DegreeData dd = cx.degree_data(k);
      CHECK(s.h.size() == dd.dim_h);
      CHECK(s.p.size() == dd.rank_d);
      CHECK(s.b.size() == (k == 0 ? 0 : cx.degree_data(k - 1).rank_d));
      std::vector<std::vector<Rational>> cols;
      for (const auto* part : {&s.h, &s.b, &s.p}) {
        for (const auto& c : *part) cols.push_back(c.flatten());
      }
      REQUIRE(cols.size() == dd.dim_l);
      CHECK(rank(M::from_columns(dd.dim_l, cols)) == dd.dim_l);
      for (const auto& h : s.h) {
        const auto img = apply<Rational>(cx.matrix(k), h.flatten());
        for (const auto& x : img) CHECK(x.is_zero());
      }
      // b lies in the image of D_{k-1}
      if (k > 0) {
        const M& prev = cx.matrix(k - 1);
        const std::size_t r = rank(prev);
        for (const auto& b : s.b) {
          std::vector<std::vector<Rational>> cs;
          for (std::size_t c = 0; c < prev.cols(); ++c) cs.push_back(prev.column(c));
          cs.push_back(b.flatten());
          CHECK(rank(M::from_columns(prev.rows(), cs)) == r);
        }
      }
    }
  }
}

TEST_CASE("H^2 representative of d(2:3) is psi^{13}_2 modulo coboundaries", "[cohomology]") {
  const D d = canonical_lambda_mu(2, 3);
  const Splitting s = splitting(d, 2);
  REQUIRE(s.h.size() == 1);
  CHECK_FALSE(in_span(s.b, psi({1, 3}, 2)));
  auto with_h = s.b;
  with_h.push_back(s.h[0]);
  CHECK(in_span(with_h, psi({1, 3}, 2)));
}

TEST_CASE("prebasis overrides", "[cohomology]") {
  const D d = canonical_lambda_mu(1, -1);
  const std::vector<C> good = {psi({1, 3}, 1), psi({1, 2}, 3)};
  const Splitting s = splitting(d, 2, good);
  CHECK(s.h == good);

  const auto rep = cohomology_report(d, 3, {{2, good}});
  CHECK(rep.splittings[2].h == good);

  // wrong count
  CHECK_THROWS_AS(splitting(d, 2, std::vector<C>{psi({1, 3}, 1)}), Error);
  try {
    splitting(d, 2, std::vector<C>{psi({1, 3}, 1)});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_prebasis);
  }
  auto code_of = [&](const std::vector<C>& h) {
    try {
      splitting(d, 2, h);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::internal;
  };
  // psi^{12}_1 is not a cocycle of d(1:-1)
  CHECK(code_of({psi({1, 3}, 1), psi({1, 2}, 1)}) == Errc::bad_prebasis);
  // a coboundary is dependent modulo B
  CHECK(code_of({psi({1, 3}, 1), s.b.front()}) == Errc::bad_prebasis);
  // a repeated class
  CHECK(code_of({psi({1, 3}, 1), psi({1, 3}, 1) + s.b.front()}) == Errc::bad_prebasis);
  // wrong arity
  CHECK(code_of({psi({1, 3}, 1), C::basis(3, MultiIndex{1}, 1)}) == Errc::bad_prebasis);
}

TEST_CASE("cohomology refuses non-Jacobi input and bad degrees", "[cohomology]") {
  const D bad = cod(M{{1, 0, 0}, {0, 0, 0}, {0, 1, 0}});
  REQUIRE_FALSE(bad.certified());
  try {
    cohomology_report(bad, 2);
    FAIL("expected NotCertified");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_certified);
  }
  try {
    cohomology_report(canonical(Label::d3), 4);
    FAIL("expected OutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::out_of_range);
  }
}

TEST_CASE("coboundary matrix columns are brackets with the basis", "[cohomology]") {
  const D d = canonical(Label::d3);
  const M m = coboundary_matrix(d, 1);
  CHECK(m.rows() == 9);
  CHECK(m.cols() == 9);
  const auto ws = words(3, 1);
  for (std::size_t j = 0; j < ws.size(); ++j) {
    for (unsigned i = 1; i <= 3; ++i) {
      const auto col = bracket(d.body(), C::basis(3, ws[j], i)).flatten();
      CHECK(m.column(j * 3 + (i - 1)) == col);
    }
  }
}
