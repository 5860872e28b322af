#pragma once

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "liedef/coderivation.hpp"
#include "liedef/errors.hpp"
#include "liedef/exterior.hpp"
#include "liedef/multipoly.hpp"
#include "liedef/rational.hpp"

namespace liedef {

using json = nlohmann::ordered_json;

/// One structure constant: [f_i, f_j] has coefficient `coeff` on f_target.
struct StructureEntry {
  unsigned i = 0, j = 0, target = 0;
  Rational coeff;
};

struct AlgebraFile {
  unsigned dim = 0;
  std::vector<StructureEntry> structure;

  /// The N x C(N,2) grid a^k_{ord(i,j)}.
  Codifferential<Rational> codifferential() const {
    Coderivation<Rational> c(dim, 2);
    for (const auto& e : structure) c.coeff(e.target, MultiIndex{e.i, e.j}) += e.coeff;
    return Codifferential<Rational>(std::move(c));
  }

  static AlgebraFile from_codifferential(const Codifferential<Rational>& d) {
    AlgebraFile f;
    f.dim = d.dim();
    for (const MultiIndex& w : words(d.dim(), 2)) {
      for (unsigned k = 1; k <= d.dim(); ++k) {
        const Rational& c = d.body().coeff(k, w);
        if (!c.is_zero()) f.structure.push_back({w[0], w[1], k, c});
      }
    }
    return f;
  }
};

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& why) { throw Error(Errc::parse_error, why); }

inline Rational rational_from_json(const json& v, const std::string& where) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  parse_fail(where + ": rationals are written as strings \"p\" or \"p/q\"");
}

inline unsigned index_from_json(const json& v, const std::string& where) {
  if (!v.is_number_integer()) parse_fail(where + " must be an integer");
  const long long x = v.get<long long>();
  if (x < 1) throw Error(Errc::dimension_mismatch, where + " must be at least 1");
  return static_cast<unsigned>(x);
}

}  // namespace detail

/// Reads {"dim": N, "structure": [{"pair": [i, j], "target": k, "coeff": "p/q"}]}.
inline AlgebraFile parse_algebra(const std::string& text, unsigned max_dim = kDefaultMaxDim) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    detail::parse_fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) detail::parse_fail("algebra file must be a JSON object");
  if (!doc.contains("dim")) detail::parse_fail("missing \"dim\"");
  AlgebraFile f;
  f.dim = detail::index_from_json(doc["dim"], "dim");
  if (f.dim > max_dim) {
    throw Error(Errc::too_large, "dim " + std::to_string(f.dim) + " exceeds the limit " + std::to_string(max_dim));
  }
  const json structure = doc.value("structure", json::array());
  if (!structure.is_array()) detail::parse_fail("\"structure\" must be a list");
  std::set<std::tuple<unsigned, unsigned, unsigned>> seen;
  for (std::size_t n = 0; n < structure.size(); ++n) {
    const json& e = structure[n];
    const std::string where = "structure[" + std::to_string(n) + "]";
    if (!e.is_object() || !e.contains("pair") || !e.contains("target") || !e.contains("coeff")) {
      detail::parse_fail(where + " needs pair, target and coeff");
    }
    if (!e["pair"].is_array() || e["pair"].size() != 2) detail::parse_fail(where + ".pair must be [i, j]");
    StructureEntry s;
    s.i = detail::index_from_json(e["pair"][0], where + ".pair[0]");
    s.j = detail::index_from_json(e["pair"][1], where + ".pair[1]");
    s.target = detail::index_from_json(e["target"], where + ".target");
    s.coeff = detail::rational_from_json(e["coeff"], where + ".coeff");
    if (s.i >= s.j) detail::parse_fail(where + ".pair needs i < j");
    if (s.j > f.dim || s.target > f.dim) {
      throw Error(Errc::dimension_mismatch, where + " refers to an index above dim " + std::to_string(f.dim));
    }
    if (!seen.insert({s.i, s.j, s.target}).second) detail::parse_fail(where + " duplicates an earlier entry");
    f.structure.push_back(s);
  }
  return f;
}

/// Normalized form: entries in basis order (pair ordinal, then target),
/// zero coefficients dropped.
inline std::string serialize_algebra(const AlgebraFile& f) {
  std::vector<StructureEntry> entries;
  for (const auto& e : f.structure) {
    if (!e.coeff.is_zero()) entries.push_back(e);
  }
  std::sort(entries.begin(), entries.end(), [](const StructureEntry& a, const StructureEntry& b) {
    const auto oa = ordinal_of(MultiIndex{a.i, a.j}), ob = ordinal_of(MultiIndex{b.i, b.j});
    return oa != ob ? oa < ob : a.target < b.target;
  });
  json doc;
  doc["dim"] = f.dim;
  doc["structure"] = json::array();
  for (const auto& e : entries) {
    json je;
    je["pair"] = {e.i, e.j};
    je["target"] = e.target;
    je["coeff"] = e.coeff.str();
    doc["structure"].push_back(je);
  }
  return doc.dump(2) + "\n";
}

/// [{"coeff": "p/q", "exponents": {"t1": 1, ...}}, ...] in printing order.
inline json poly_to_json(const MultiPoly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::object();
    for (const auto& [param, e] : m.powers()) exps[param.name()] = e;
    out.push_back(json{{"coeff", c.str()}, {"exponents", exps}});
  }
  return out;
}

inline MultiPoly poly_from_json(const json& v) {
  if (!v.is_array()) detail::parse_fail("polynomial must be a list of terms");
  MultiPoly p;
  for (const json& t : v) {
    if (!t.is_object() || !t.contains("coeff")) detail::parse_fail("polynomial term needs coeff");
    const Rational c = detail::rational_from_json(t["coeff"], "coeff");
    std::vector<Monomial::Power> powers;
    const json exps = t.value("exponents", json::object());
    if (!exps.is_object()) detail::parse_fail("exponents must be an object");
    for (const auto& [name, e] : exps.items()) {
      if (!e.is_number_unsigned() && !e.is_number_integer()) detail::parse_fail("exponent must be an integer");
      const long long x = e.get<long long>();
      if (x < 0) detail::parse_fail("exponent must be non-negative");
      powers.emplace_back(Param::parse(name), static_cast<unsigned>(x));
    }
    p += MultiPoly::term(c, Monomial::from_powers(std::move(powers)));
  }
  return p;
}

template <class S>
json matrix_to_json(const Matrix<S>& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    out.push_back(row);
  }
  return out;
}

/// Lowercase hex SHA-256 of `data`.
inline std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(Errc::internal, "SHA-256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

}  // namespace liedef
