#pragma once

#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "liedef/classify3.hpp"
#include "liedef/cohomology.hpp"
#include "liedef/deform.hpp"
#include "liedef/fixtures.hpp"
#include "liedef/io.hpp"
#include "liedef/moduli_graph.hpp"

namespace liedef::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Format { text, json };

/// What a command produced: a machine payload, the human rendering and
/// the process exit code (0 ok, 1 mathematical negative, 2 usage error).
struct Outcome {
  json result;
  std::string text;
  int exit_code = 0;
};

struct Input {
  std::string bytes;
  AlgebraFile file;
};

inline Input read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "cannot read '" + path + "'");
  Input out;
  out.bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  out.file = parse_algebra(out.bytes);
  return out;
}

inline int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::not_certified:
    case Errc::relation_violated:
      return 1;
    default:
      return 2;
  }
}

/// Pretty matrix of a polynomial grid: [[0,1+t^1,1],...].
template <class S>
std::string pretty_matrix(const Matrix<S>& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r ? ",[" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ",";
      if constexpr (requires { m(r, c).pretty(); }) {
        out += m(r, c).pretty();
      } else {
        out += m(r, c).str();
      }
    }
    out += "]";
  }
  return out + "]";
}

template <class S>
json coefficient_list(const Coderivation<S>& c) {
  json out = json::array();
  for (const MultiIndex& w : words(c.dim(), c.arity())) {
    for (unsigned i = 1; i <= c.dim(); ++i) {
      const S& v = c.coeff(i, w);
      if (v.is_zero()) continue;
      json e{{"basis", basis_name(w, i)}, {"word", w.compact()}, {"target", i}};
      if constexpr (std::is_same_v<S, MultiPoly>) {
        e["coeff"] = v.str();
        e["terms"] = poly_to_json(v);
      } else {
        e["coeff"] = v.str();
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

inline Outcome jacobi(const AlgebraFile& f) {
  const Codifferential<Rational> d = f.codifferential();
  const Coderivation<Rational> res = jacobi_residual(d.body());
  Outcome o;
  o.result = {{"dim", f.dim}, {"certified", d.certified()}, {"residual", render(res)},
              {"residual_coefficients", coefficient_list(res)}};
  o.text = "Jacobi residual: " + render(res) + "\n" + (d.certified() ? "certified: yes\n" : "certified: no\n");
  o.exit_code = d.certified() ? 0 : 1;
  return o;
}

inline void require_certified_verbose(const Codifferential<Rational>& d) {
  if (!d.certified()) {
    throw Error(Errc::not_certified, "Jacobi residual is " + render(jacobi_residual(d.body())));
  }
}

inline Outcome cohomology(const AlgebraFile& f, std::optional<unsigned> max_degree) {
  const Codifferential<Rational> d = f.codifferential();
  require_certified_verbose(d);
  const unsigned kmax = max_degree.value_or(f.dim);
  if (kmax > f.dim) {
    throw Error(Errc::out_of_range, "--max-degree " + std::to_string(kmax) + " exceeds dim " + std::to_string(f.dim));
  }
  const CohomologyReport rep = cohomology_report(d, kmax);
  Outcome o;
  o.result = {{"dim", f.dim}, {"max_degree", kmax}, {"degrees", json::array()}};
  std::ostringstream text;
  text << "dim " << f.dim << "\n";
  for (unsigned k = 0; k <= kmax; ++k) {
    const DegreeData& dd = rep.degrees[k];
    json prebasis = json::array();
    std::string names;
    for (const auto& h : rep.splittings[k].h) {
      prebasis.push_back(render(h));
      names += (names.empty() ? "" : ", ") + render(h);
    }
    o.result["degrees"].push_back({{"k", k},
                                   {"dim_L", dd.dim_l},
                                   {"rank_D", dd.rank_d},
                                   {"dim_ker", dd.dim_ker},
                                   {"dim_H", dd.dim_h},
                                   {"prebasis", prebasis}});
    text << "H^" << k << " = " << dd.dim_h;
    if (!names.empty()) text << "  [" << names << "]";
    text << "\n";
  }
  o.text = text.str();
  return o;
}

inline Outcome classify(const AlgebraFile& f) {
  if (f.dim != 3) {
    throw Error(Errc::unsupported_dim, "classification is implemented for dim 3, got " + std::to_string(f.dim));
  }
  const Codifferential<Rational> d = f.codifferential();
  require_certified_verbose(d);
  const Classification c = liedef::classify(d);
  std::string diag;
  const bool ok = verify_equiv(c.target, d, c.witness, &diag);
  Outcome o;
  o.result = {{"label", std::string(label_name(c.cls.label))}, {"class", c.cls.str()}};
  o.result["invariant"] = c.cls.invariant ? json(c.cls.invariant->str()) : json(nullptr);
  o.result["point"] = c.cls.point ? json(detail::point_str(c.cls)) : json(nullptr);
  o.result["witness"] = matrix_to_json(c.witness);
  o.result["target"] = matrix_to_json(c.target.body().grid());
  o.result["canonical_target"] = c.canonical_target;
  o.result["verified"] = ok;
  if (!c.note.empty()) o.result["note"] = c.note;

  std::ostringstream text;
  text << "label: " << label_name(c.cls.label) << "\n";
  if (c.cls.invariant) text << "invariant: " << c.cls.invariant->str() << "\n";
  if (c.cls.point) text << "point: " << detail::point_str(c.cls) << "\n";
  text << "target: " << pretty_matrix(c.target.body().grid()) << (c.canonical_target ? "" : " (normal form)") << "\n";
  text << "witness G: " << pretty_matrix(c.witness) << "\n";
  text << "verify_equiv: " << (ok ? "ok" : "failed (" + diag + ")") << "\n";
  if (!c.note.empty()) text << "note: " << c.note << "\n";
  o.text = text.str();
  o.exit_code = ok ? 0 : 1;
  return o;
}

inline Outcome miniversal(const std::optional<AlgebraFile>& file, const std::optional<std::string>& fixture,
                          unsigned truncation) {
  if (!file && !fixture) throw Error(Errc::parse_error, "miniversal needs an algebra file or --fixtures");
  std::optional<Fixture> fx;
  if (fixture) fx = fixtures::lookup(*fixture);
  const Codifferential<Rational> d = file ? file->codifferential() : fx->d;
  if (fx && d.dim() != 3) throw Error(Errc::unsupported_dim, "fixture prebases are for dim 3");
  require_certified_verbose(d);
  const MiniversalResult mv = liedef::miniversal(d, truncation, fx ? fx->prebases : PrebasisFixture{});
  const DeformedCodifferential& def = mv.deformation;

  Outcome o;
  o.result = {{"dim", d.dim()}, {"truncation_degree", truncation}, {"rigid", mv.rigid()}};
  o.result["fixture"] = fixture ? json(*fixture) : json(nullptr);
  if (mv.rigid()) {
    o.result["exact"] = true;
    o.result["matrix"] = matrix_to_json(d.body().grid());
    o.result["relations"] = json::array();
    o.text = "rigid: H^2=0, miniversal = d\n";
    return o;
  }
  const Coderivation<MultiPoly> body = def.body();
  json params = json::array();
  for (std::size_t i = 0; i < def.deltas.size(); ++i) {
    params.push_back({{"name", tparam(static_cast<unsigned>(i + 1)).name()}, {"direction", render(def.deltas[i])}});
  }
  json corrections = json::array();
  for (std::size_t j = 0; j < def.gammas.size(); ++j) {
    if (def.x_values[j].is_zero()) continue;
    corrections.push_back({{"name", xparam(static_cast<unsigned>(j + 1)).name()},
                           {"direction", render(def.gammas[j])},
                           {"value", def.x_values[j].str()}});
  }
  json relations = json::array();
  for (const auto& r : mv.relations) {
    relations.push_back({{"text", r.str()}, {"pretty", r.pretty()}, {"terms", poly_to_json(r)}});
  }
  o.result["parameters"] = params;
  o.result["corrections"] = corrections;
  o.result["matrix"] = matrix_to_json(body.grid());
  o.result["matrix_pretty"] = pretty_matrix(body.grid());
  o.result["relations"] = relations;
  o.result["bracket"] = render(mv.bracket);
  o.result["bracket_coefficients"] = coefficient_list(mv.bracket);
  o.result["exact"] = mv.exact;
  o.result["iterations"] = mv.iterations;

  std::ostringstream text;
  text << "parameters:";
  for (std::size_t i = 0; i < def.deltas.size(); ++i) {
    text << (i ? ", " : " ") << tparam(static_cast<unsigned>(i + 1)).pretty() << " -> " << render(def.deltas[i]);
  }
  text << "\nmatrix: " << pretty_matrix(body.grid()) << "\n";
  text << "[d,d] = " << render(mv.bracket) << "\n";
  if (mv.relations.empty()) {
    text << "relations: none\n";
  } else {
    text << "relations:\n";
    for (const auto& r : mv.relations) text << "  " << r.pretty() << "\n";
  }
  text << "exact: " << (mv.exact ? "yes" : "no (truncated at degree " + std::to_string(truncation) + ")") << "\n";
  o.text = text.str();
  return o;
}

inline json graph_json(const ModuliGraph& g) {
  json nodes = json::array();
  for (const auto& n : g.nodes) nodes.push_back({{"id", n.id}, {"label", n.label}, {"marked", n.marked}});
  json edges = json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"from", e.from}, {"to", e.to}, {"kind", e.kind}, {"tail", e.tail}, {"head", e.head}});
  }
  json evidence = json::array();
  for (const auto& e : g.evidence) {
    evidence.push_back({{"source", e.source}, {"branch", e.branch}, {"sample", e.sample}, {"class", e.target}});
  }
  return {{"nodes", nodes}, {"edges", edges}, {"evidence", evidence}};
}

inline Outcome moduli_graph(const std::string& emit, bool include_abelian) {
  if (emit != "dot" && emit != "json") throw Error(Errc::parse_error, "--emit must be dot or json");
  GraphOptions opts;
  opts.include_abelian = include_abelian;
  const ModuliGraph g = liedef::moduli_graph(opts);
  Outcome o;
  if (emit == "dot") {
    o.text = g.dot();
    o.result = {{"dot", o.text}};
  } else {
    o.result = graph_json(g);
    o.text = o.result.dump(2) + "\n";
  }
  return o;
}

/// Algebra file of a catalog fixture, or the list of labels.
inline Outcome catalog(const std::optional<std::string>& label) {
  Outcome o;
  if (!label) {
    o.result = {{"fixtures", fixtures::names()}};
    for (const auto& n : fixtures::names()) o.text += n + "\n";
    return o;
  }
  const Fixture f = fixtures::lookup(*label);
  o.text = serialize_algebra(AlgebraFile::from_codifferential(f.d));
  o.result = {{"name", f.name}, {"algebra", json::parse(o.text)}};
  return o;
}

/// {"command": {...}, "input_digest": "sha256:...", "tool_version": ..., "result": ...}
inline json report(const std::vector<std::string>& argv, const std::string& input, const json& result) {
  json cmd{{"name", argv.empty() ? "" : argv.front()}, {"args", json::array()}};
  for (std::size_t i = 1; i < argv.size(); ++i) cmd["args"].push_back(argv[i]);
  return {{"command", cmd},
          {"input_digest", "sha256:" + sha256_hex(input)},
          {"tool_version", kToolVersion},
          {"result", result}};
}

}  // namespace liedef::cli
