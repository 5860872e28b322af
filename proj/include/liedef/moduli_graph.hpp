#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "liedef/classify3.hpp"
#include "liedef/deform.hpp"
#include "liedef/fixtures.hpp"

namespace liedef {

struct GraphNode {
  std::string id;
  std::string label;
  std::vector<std::string> marked;  // marked points of the family stratum
};

struct GraphEdge {
  std::string from;
  std::string to;
  std::string kind;  // "jump" or "deform"
  std::string tail;  // source point on the family, or empty
  std::string head;  // target point on the family ("*" for several), or empty

  auto key() const { return std::tie(from, to, tail, head, kind); }
  friend bool operator<(const GraphEdge& a, const GraphEdge& b) { return a.key() < b.key(); }
  friend bool operator==(const GraphEdge& a, const GraphEdge& b) { return a.key() == b.key(); }
};

/// One classified sample behind the edges.
struct GraphEvidence {
  std::string source;
  std::string branch;
  std::string sample;
  std::string target;
};

struct ModuliGraph {
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  std::vector<GraphEvidence> evidence;

  bool has_edge(const std::string& from, const std::string& to) const {
    return std::any_of(edges.begin(), edges.end(),
                       [&](const GraphEdge& e) { return e.from == from && e.to == to; });
  }

  std::string dot() const {
    std::string out = "digraph moduli {\n";
    for (const auto& n : nodes) {
      out += "  " + n.id + " [label=\"" + n.label + "\"";
      if (!n.marked.empty()) {
        std::string m;
        for (const auto& p : n.marked) m += (m.empty() ? "" : " ") + p;
        out += ", marked=\"" + m + "\"";
      }
      out += "];\n";
    }
    for (const auto& e : edges) {
      out += "  " + e.from + " -> " + e.to + " [kind=\"" + e.kind + "\"";
      if (!e.tail.empty()) out += ", taillabel=\"" + e.tail + "\"";
      if (!e.head.empty()) out += ", headlabel=\"" + e.head + "\"";
      out += "];\n";
    }
    return out + "}\n";
  }
};

struct GraphOptions {
  bool include_abelian = false;
  unsigned truncation = 4;
};

namespace detail {

inline std::string point_str(const CanonicalClass& c) {
  if (auto m = c.marked_point()) return *m;
  if (!c.point) return c.str();
  return "(" + c.point->first.str() + ":" + c.point->second.str() + ")";
}

inline std::string node_of(const CanonicalClass& c) {
  return c.label == Label::family ? "family" : std::string(label_name(c.label));
}

inline const std::vector<std::string>& marked_points() {
  static const std::vector<std::string> pts = {"(1:-1)", "(1:0)", "(1:1)"};
  return pts;
}

inline std::string sample_str(const Assignment& a) {
  std::string s;
  for (const auto& [p, v] : a) s += (s.empty() ? "" : ",") + p.name() + "=" + v.str();
  return s;
}

inline Assignment make_sample(std::initializer_list<std::pair<unsigned, Rational>> vals) {
  Assignment a;
  for (const auto& [i, v] : vals) a[tparam(i)] = v;
  return a;
}

/// Rational sample points for each branch of the catalog fixtures.
inline std::vector<Assignment> branch_samples(const std::string& fixture, const std::string& branch) {
  const Rational h(mpz_class(1), mpz_class(2));
  if (fixture == "d1" && branch == "1") {
    // free t2, t4, t5; both on and off t2 t4 + t5^2 = 0
    return {make_sample({{2, 1}, {4, 1}, {5, 0}}),  make_sample({{2, 2}, {4, 3}, {5, -1}}),
            make_sample({{2, 0}, {4, 1}, {5, 1}}),  make_sample({{2, 1}, {4, -1}, {5, 1}}),
            make_sample({{2, 4}, {4, -1}, {5, 2}}), make_sample({{2, -1}, {4, 9}, {5, 3}})};
  }
  if (fixture == "d1" && branch == "2") {
    return {make_sample({{1, 5}, {2, 6}}), make_sample({{1, 3}, {2, 2}}), make_sample({{1, 1}, {2, -6}}),
            make_sample({{1, 7}, {2, 10}})};
  }
  if (fixture == "d1" && branch == "3") {
    // t3 = a + b, t4 = -ab
    return {make_sample({{1, 1}, {3, 5}, {4, -6}}), make_sample({{1, 2}, {3, 3}, {4, -2}}),
            make_sample({{1, -1}, {3, 1}, {4, 6}}), make_sample({{1, h}, {3, 9}, {4, -20}})};
  }
  if (fixture == "d2") {
    return {make_sample({{1, 0}, {2, 0}, {3, 1}}), make_sample({{1, 0}, {2, 0}, {3, 2}}),
            make_sample({{1, 0}, {2, 0}, {3, -h}})};
  }
  if (fixture == "d_1_m1" && branch == "t1=0") {
    return {make_sample({{2, 1}}), make_sample({{2, 2}}), make_sample({{2, -1}}), make_sample({{2, h}})};
  }
  if (fixture == "d_1_m1" && branch == "t2=0") {
    return {make_sample({{1, 1}}), make_sample({{1, 2}}), make_sample({{1, -3}})};
  }
  // one-parameter family members: move along the family
  return {make_sample({{1, 1}}), make_sample({{1, -1}}), make_sample({{1, 2}})};
}

}  // namespace detail

/// Jump structure of the moduli space, built by classifying rational
/// samples of the catalog miniversal deformations along their branches.
inline ModuliGraph moduli_graph(const GraphOptions& opts = {}) {
  ModuliGraph g;
  std::set<GraphEdge> edges;
  if (opts.include_abelian) g.nodes.push_back({"abelian", "abelian", {}});
  g.nodes.push_back({"d1", "d1", {}});
  g.nodes.push_back({"d2", "d2", {}});
  g.nodes.push_back({"d3", "d3", {}});
  g.nodes.push_back({"family", "P1/S2", detail::marked_points()});

  auto is_marked = [](const std::string& p) {
    const auto& m = detail::marked_points();
    return std::find(m.begin(), m.end(), p) != m.end();
  };

  for (const std::string name : {"d1", "d2", "d3", "d_1_0", "d_1_1", "d_1_m1", "d_lambda_mu(2,3)"}) {
    const Fixture f = fixtures::lookup(name);
    const MiniversalResult mv = miniversal(f.d, opts.truncation, f.prebases);
    const Classification self = classify(f.d);
    const std::string from = detail::node_of(self.cls);
    std::string tail;
    if (from == "family") {
      const std::string p = detail::point_str(self.cls);
      tail = is_marked(p) ? p : "*";
    }
    for (const Branch& b : f.branches) {
      // target node -> family points reached on this branch
      std::map<std::string, std::set<std::string>> reached;
      for (const auto& s : analyze_branch(mv, b, detail::branch_samples(name, b.name))) {
        const std::string to = detail::node_of(s.classification.cls);
        const std::string pt = to == "family" ? detail::point_str(s.classification.cls) : "";
        reached[to].insert(pt);
        g.evidence.push_back({name, b.name, detail::sample_str(s.sample), s.classification.cls.str()});
      }
      for (const auto& [to, pts] : reached) {
        if (from == "family" && to == "family") {
          edges.insert({"family", "family", "deform", "", ""});
          continue;
        }
        std::string head;
        if (to == "family") head = pts.size() == 1 ? *pts.begin() : "*";
        edges.insert({from, to, "jump", tail, head});
      }
    }
  }

  if (opts.include_abelian) {
    // t * d for a catalog d is equivalent to d for every t != 0
    const Rational two(2);
    for (const auto& cls : {CanonicalClass{Label::d1, {}, {}}, CanonicalClass{Label::d2, {}, {}},
                            CanonicalClass{Label::d3, {}, {}}, family_class(2, 3)}) {
      const Codifferential<Rational> moved(canonical(cls).body() * two);
      const Classification c = classify(moved);
      const std::string to = detail::node_of(c.cls);
      edges.insert({"abelian", to, "jump", "", to == "family" ? "*" : ""});
      g.evidence.push_back({"abelian", "t*" + cls.str(), "t=2", c.cls.str()});
    }
  }

  g.edges.assign(edges.begin(), edges.end());
  std::sort(g.nodes.begin(), g.nodes.end(), [](const GraphNode& a, const GraphNode& b) { return a.id < b.id; });
  return g;
}

}  // namespace liedef
