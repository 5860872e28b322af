#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liedef/classify3.hpp"
#include "liedef/deform.hpp"

namespace liedef {

/// A catalog algebra with the prebases and solution branches used to
/// reproduce the reference deformation computations.
struct Fixture {
  std::string name;
  Codifferential<Rational> d;
  PrebasisFixture prebases;
  std::vector<Branch> branches;
};

namespace fixtures {

inline Coderivation<Rational> psi(std::initializer_list<unsigned> word, unsigned target) {
  return Coderivation<Rational>::basis(3, MultiIndex(word), target);
}

inline MultiPoly t(unsigned i) { return MultiPoly::variable(tparam(i)); }

inline std::vector<std::string> names() {
  return {"abelian", "d1", "d2", "d3", "d_1_0", "d_1_1", "d_1_m1", "d_lambda_mu(2,3)"};
}

inline Fixture family(const Rational& l, const Rational& m, std::string name) {
  Fixture f{std::move(name), canonical_lambda_mu(l, m), {}, {}};
  if (l == Rational(1) && m == Rational(-1)) {
    f.prebases.h2 = {psi({1, 3}, 1), psi({1, 2}, 3)};
    f.prebases.h3 = {Coderivation<Rational>::basis(3, MultiIndex{1, 2, 3}, 3)};
    f.branches = {Branch{"t1=0", {{tparam(1), RatFun(0)}}}, Branch{"t2=0", {{tparam(2), RatFun(0)}}}};
  } else {
    f.prebases.h2 = {psi({1, 3}, 2)};
    f.prebases.h3 = std::vector<Coderivation<Rational>>{};
    f.branches = {Branch{"free", {}}};
  }
  return f;
}

inline Fixture d1() {
  Fixture f{"d1", canonical(Label::d1), {}, {}};
  f.prebases.h2 = {psi({1, 2}, 1), psi({1, 2}, 3), psi({1, 3}, 1), psi({1, 3}, 2),
                   psi({1, 3}, 3) - psi({1, 2}, 2)};
  f.prebases.h3 = {Coderivation<Rational>::basis(3, MultiIndex{1, 2, 3}, 2),
                   Coderivation<Rational>::basis(3, MultiIndex{1, 2, 3}, 3)};
  f.branches = {
      Branch{"1", {{tparam(1), RatFun(0)}, {tparam(3), RatFun(0)}}},
      Branch{"2", {{tparam(3), RatFun(0)}, {tparam(4), RatFun(0)}, {tparam(5), RatFun(0)}}},
      Branch{"3",
             {{tparam(5), RatFun(-(t(1) * t(4)), t(3))}, {tparam(2), RatFun(-(t(1) * t(1) * t(4)), t(3) * t(3))}}},
  };
  return f;
}

inline Fixture d2() {
  Fixture f{"d2", canonical(Label::d2), {}, {}};
  f.prebases.h2 = {psi({1, 3}, 1), psi({1, 3}, 2), psi({2, 3}, 1)};
  f.prebases.h3 = std::vector<Coderivation<Rational>>{};
  f.branches = {Branch{"free", {}}};
  return f;
}

inline Fixture d3() {
  Fixture f{"d3", canonical(Label::d3), {}, {}};
  f.prebases.h2 = std::vector<Coderivation<Rational>>{};
  f.prebases.h3 = std::vector<Coderivation<Rational>>{};
  return f;
}

/// Looks up "d1", "d2", "d3", "d_1_0", "d_1_1", "d_1_m1", "abelian" or
/// "d_lambda_mu(l,m)" with rational l, m.
inline Fixture lookup(std::string_view name) {
  if (name == "d1") return d1();
  if (name == "d2") return d2();
  if (name == "d3") return d3();
  if (name == "d_1_0") return family(1, 0, "d_1_0");
  if (name == "d_1_1") return family(1, 1, "d_1_1");
  if (name == "d_1_m1") return family(1, -1, "d_1_m1");
  if (name == "abelian") return Fixture{"abelian", canonical(Label::abelian), {}, {}};
  const std::string_view prefix = "d_lambda_mu(";
  if (name.substr(0, prefix.size()) == prefix && name.back() == ')') {
    const std::string_view args = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    const std::size_t comma = args.find(',');
    if (comma == std::string_view::npos) throw Error(Errc::bad_label, "expected d_lambda_mu(l,m)");
    const Rational l = Rational::parse(args.substr(0, comma));
    const Rational m = Rational::parse(args.substr(comma + 1));
    return family(l, m, std::string(name));
  }
  throw Error(Errc::bad_label, "unknown fixture '" + std::string(name) + "'");
}

/// The seven algebras whose cohomology is tabulated, as (name, H^1, H^2, H^3).
struct TableRow {
  std::string name;
  unsigned h1, h2, h3;
};

inline std::vector<TableRow> cohomology_table() {
  return {{"d1", 4, 5, 2},     {"d2", 3, 3, 0},     {"d_1_1", 1, 1, 0},          {"d_lambda_mu(2,3)", 1, 1, 0},
          {"d_1_0", 2, 1, 0}, {"d_1_m1", 1, 2, 1}, {"d3", 0, 0, 0}};
}

}  // namespace fixtures
}  // namespace liedef
