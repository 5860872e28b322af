#include <catch_amalgamated.hpp>

#include <map>
#include <tuple>

#include "liedef/exterior.hpp"

using namespace liedef;

TEST_CASE("s_index examples", "[exterior]") {
  CHECK(s_index(1, 2, 3) == MultiIndex{1, 2});
  CHECK(s_index(2, 2, 3) == MultiIndex{1, 3});
  CHECK(s_index(3, 2, 3) == MultiIndex{2, 3});
  CHECK(s_index(1, 3, 3) == MultiIndex{1, 2, 3});
  CHECK(s_index(4, 1, 5) == MultiIndex{4});
  CHECK_THROWS_AS(s_index(4, 2, 3), Error);
  CHECK_THROWS_AS(s_index(0, 2, 3), Error);
}

TEST_CASE("ordinal_of examples", "[exterior]") {
  CHECK(ordinal_of(MultiIndex{1, 2}) == 1);
  CHECK(ordinal_of(MultiIndex{2, 3}) == 3);
  CHECK(ordinal_of(MultiIndex{1, 2, 3}) == 1);
  CHECK(ordinal_of(MultiIndex{}) == 1);
}

TEST_CASE("multi-index validation", "[exterior]") {
  CHECK_THROWS_AS(MultiIndex({2, 1}), Error);
  CHECK_THROWS_AS(MultiIndex({1, 1}), Error);
  CHECK_THROWS_AS(MultiIndex({0, 1}), Error);
  CHECK(MultiIndex{1, 3}.str() == "(1,3)");
  CHECK(MultiIndex{1, 3}.compact() == "13");
}

TEST_CASE("s_index and ordinal_of are inverse", "[exterior][property]") {
  for (unsigned n = 1; n <= 8; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      const auto count = binomial(n, k);
      for (std::uint64_t j = 1; j <= count; ++j) {
        const MultiIndex w = s_index(j, k, n);
        REQUIRE(w.size() == k);
        REQUIRE(w.back() <= n);
        REQUIRE(ordinal_of(w) == j);
      }
    }
  }
}

TEST_CASE("s_index enumerates in colexicographic order", "[exterior][property]") {
  // Independent oracle: order by reversed entries lexicographically.
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      const auto ws = words(n, k);
      REQUIRE(ws.size() == binomial(n, k));
      for (std::size_t i = 1; i < ws.size(); ++i) {
        std::vector<unsigned> a(ws[i - 1].begin(), ws[i - 1].end());
        std::vector<unsigned> b(ws[i].begin(), ws[i].end());
        std::reverse(a.begin(), a.end());
        std::reverse(b.begin(), b.end());
        REQUIRE(a < b);
        REQUIRE(ws[i - 1] < ws[i]);
      }
    }
  }
}

TEST_CASE("unshuffle examples", "[exterior]") {
  const auto u10 = unshuffles(1, 0);
  REQUIRE(u10.size() == 1);
  CHECK(u10[0].perm == std::vector<unsigned>{1});
  CHECK(u10[0].sign == 1);

  const auto u21 = unshuffles(2, 1);
  REQUIRE(u21.size() == 3);
  CHECK(u21[0].perm == std::vector<unsigned>{1, 2, 3});
  CHECK(u21[0].sign == 1);
  CHECK(u21[1].perm == std::vector<unsigned>{1, 3, 2});
  CHECK(u21[1].sign == -1);
  CHECK(u21[2].perm == std::vector<unsigned>{2, 3, 1});
  CHECK(u21[2].sign == 1);

  CHECK(unshuffles(2, 2).size() == 6);
  CHECK_THROWS_AS(unshuffles(7, 6), Error);
  CHECK(unshuffles(6, 6).size() == 924);
}

TEST_CASE("unshuffles are increasing on both blocks", "[exterior][property]") {
  for (unsigned k = 1; k <= 6; ++k) {
    for (unsigned l = 0; l <= 6; ++l) {
      const auto us = unshuffles(k, l);
      REQUIRE(us.size() == binomial(k + l, k));
      for (const auto& u : us) {
        for (unsigned i = 1; i < k; ++i) REQUIRE(u.perm[i - 1] < u.perm[i]);
        for (unsigned i = k + 1; i < k + l; ++i) REQUIRE(u.perm[i - 1] < u.perm[i]);
        // sign by counting transpositions in a bubble sort of the permutation
        auto p = u.perm;
        int swaps = 0;
        for (std::size_t a = 0; a < p.size(); ++a) {
          for (std::size_t b = 0; b + 1 < p.size() - a; ++b) {
            if (p[b] > p[b + 1]) {
              std::swap(p[b], p[b + 1]);
              ++swaps;
            }
          }
        }
        REQUIRE(u.sign == (swaps % 2 == 0 ? 1 : -1));
      }
    }
  }
}

TEST_CASE("wedge re-sorts with sign", "[exterior]") {
  auto w = wedge(MultiIndex{3}, MultiIndex{1, 2});
  REQUIRE(w);
  CHECK(w->word == MultiIndex{1, 2, 3});
  CHECK(w->sign == 1);
  w = wedge(MultiIndex{2}, MultiIndex{1, 3});
  REQUIRE(w);
  CHECK(w->sign == -1);
  CHECK_FALSE(wedge(MultiIndex{1}, MultiIndex{1, 2}).has_value());
}

TEST_CASE("comultiply examples", "[exterior]") {
  const auto c12 = comultiply(MultiIndex{1, 2});
  REQUIRE(c12.size() == 2);
  CHECK(c12[0].left == MultiIndex{1});
  CHECK(c12[0].right == MultiIndex{2});
  CHECK(c12[0].sign == 1);
  CHECK(c12[1].left == MultiIndex{2});
  CHECK(c12[1].right == MultiIndex{1});
  CHECK(c12[1].sign == -1);
  CHECK(comultiply(MultiIndex{1}).empty());
  const auto c123 = comultiply(MultiIndex{1, 2, 3});
  CHECK(c123.size() == 6);
  CHECK(std::count_if(c123.begin(), c123.end(), [](const Split& s) { return s.left.size() == 1; }) == 3);
}

TEST_CASE("comultiplication is coassociative", "[exterior][property]") {
  using Key = std::tuple<MultiIndex, MultiIndex, MultiIndex>;
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      for (const MultiIndex& w : words(n, k)) {
        std::map<Key, int> lhs, rhs;
        for (const Split& s : comultiply(w)) {
          for (const Split& t : comultiply(s.left)) lhs[{t.left, t.right, s.right}] += s.sign * t.sign;
          for (const Split& t : comultiply(s.right)) rhs[{s.left, t.left, t.right}] += s.sign * t.sign;
        }
        std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
        REQUIRE(lhs == rhs);
      }
    }
  }
}

TEST_CASE("binomial convention", "[exterior]") {
  CHECK(binomial(2, 3) == 0);
  CHECK(binomial(3, 0) == 1);
  CHECK(binomial(8, 4) == 70);
}
