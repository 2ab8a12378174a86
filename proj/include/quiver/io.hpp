#pragma once

// JSON and DOT interchange. Counts and coefficients are written as decimal
// strings so nothing is truncated to 64 bits.

#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "quiver/adjacency.hpp"
#include "quiver/extremal.hpp"
#include "quiver/graph.hpp"
#include "quiver/leavitt.hpp"
#include "quiver/path_algebra.hpp"
#include "quiver/structure.hpp"

namespace quiver {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Graphs

inline Json graph_to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.vertices();
  j["edges"] = Json::array();
  for (const auto& e : g.edge_specs()) j["edges"].push_back({{"id", e.id}, {"src", e.src}, {"dst", e.dst}});
  j["infinite_bundles"] = Json::array();
  for (const auto& b : g.bundle_specs()) j["infinite_bundles"].push_back({{"src", b.src}, {"dst", b.dst}});
  return j;
}

namespace detail {
inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::string str_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string()) fail(ErrorCode::ParseError, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

inline std::vector<std::string> str_array(const Json& v, const char* what) {
  if (!v.is_array()) fail(ErrorCode::ParseError, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) fail(ErrorCode::ParseError, std::string(what) + " must hold strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

inline std::string big_string(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  fail(ErrorCode::ParseError, "expected a decimal string or integer");
}
}  // namespace detail

inline Graph graph_from_json(const Json& j) {
  auto vs = detail::str_array(detail::field(j, "vertices"), "vertices");
  std::vector<EdgeSpec> es;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) fail(ErrorCode::ParseError, "edges must be an array");
    for (const auto& e : j["edges"]) {
      es.push_back({detail::str_field(e, "id"), detail::str_field(e, "src"), detail::str_field(e, "dst")});
    }
  }
  std::vector<BundleSpec> bs;
  if (j.contains("infinite_bundles")) {
    if (!j["infinite_bundles"].is_array()) fail(ErrorCode::ParseError, "infinite_bundles must be an array");
    for (const auto& b : j["infinite_bundles"]) bs.push_back({detail::str_field(b, "src"), detail::str_field(b, "dst")});
  }
  return build_graph(std::move(vs), es, bs);
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Graph load_graph(const std::string& path) { return graph_from_json(parse_json_text(read_file(path))); }

// ---------------------------------------------------------------------------
// Matrices

inline Json matrix_to_json(const CountMatrix& m) {
  Json j;
  j["index"] = m.index;
  j["rows"] = Json::array();
  for (const auto& r : m.rows) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(x.str());
    j["rows"].push_back(row);
  }
  return j;
}

inline CountMatrix matrix_from_json(const Json& j) {
  CountMatrix m;
  const auto& rows = detail::field(j, "rows");
  if (!rows.is_array()) fail(ErrorCode::ParseError, "rows must be an array");
  if (j.contains("index")) {
    m.index = detail::str_array(j["index"], "index");
  } else {
    for (std::size_t i = 0; i < rows.size(); ++i) m.index.push_back(std::to_string(i + 1));
  }
  if (m.index.size() != rows.size()) fail(ErrorCode::DimensionMismatch, "index and rows differ in length");
  for (const auto& r : rows) {
    if (!r.is_array() || r.size() != rows.size()) fail(ErrorCode::DimensionMismatch, "matrix must be square");
    std::vector<BigInt> row;
    for (const auto& x : r) {
      try {
        row.emplace_back(detail::big_string(x));
      } catch (const Error&) {
        throw;
      } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "bad matrix entry");
      }
      if (row.back() < 0) fail(ErrorCode::InvalidRange, "negative matrix entry");
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Traces

inline Json trace_to_json(const ReshapeTrace& t) {
  Json j;
  j["k"] = t.k;
  j["steps"] = Json::array();
  for (const auto& s : t.steps) {
    j["steps"].push_back({{"kind", to_string(s.kind)}, {"count", s.count.str()}, {"graph", graph_to_json(s.snapshot)}});
  }
  return j;
}

inline ReshapeTrace trace_from_json(const Json& j) {
  ReshapeTrace t;
  const auto& k = detail::field(j, "k");
  if (!k.is_number_unsigned()) fail(ErrorCode::ParseError, "k must be a nonnegative integer");
  t.k = k.get<std::size_t>();
  const auto& steps = detail::field(j, "steps");
  if (!steps.is_array()) fail(ErrorCode::ParseError, "steps must be an array");
  for (const auto& s : steps) {
    auto kind = step_kind_from_string(detail::str_field(s, "kind"));
    if (!kind) fail(ErrorCode::ParseError, "unknown step kind");
    t.steps.push_back({*kind, graph_from_json(detail::field(s, "graph")), BigInt(detail::big_string(detail::field(s, "count")))});
  }
  return t;
}

// ---------------------------------------------------------------------------
// Paths and algebra elements

inline Json path_to_json(const Graph& g, const Path& p) {
  if (p.edges.empty()) return Json{{"vertex", g.vertex_name(p.base)}};
  return Json{{"path", edge_names(g, p)}};
}

inline Path path_from_json(const Graph& g, const Json& j) {
  if (j.contains("vertex")) return vertex_path(g.vertex_index(detail::str_field(j, "vertex")));
  return make_path(g, detail::str_array(detail::field(j, "path"), "path"));
}

template <class Field>
Json path_element_to_json(const PathElement<Field>& x, const std::string& graph_name) {
  Json j;
  j["graph"] = graph_name;
  j["terms"] = Json::array();
  std::vector<std::pair<Path, Field>> items(x.terms.begin(), x.terms.end());
  std::sort(items.begin(), items.end(),
            [&](const auto& a, const auto& b) { return path_display_less(*x.graph, a.first, b.first); });
  for (const auto& [p, c] : items) {
    Json t = path_to_json(*x.graph, p);
    t["coeff"] = FieldTraits<Field>::str(c);
    j["terms"].push_back(t);
  }
  return j;
}

template <class Field>
PathElement<Field> path_element_from_json(std::shared_ptr<const Graph> g, const Json& j) {
  PathElement<Field> x(g);
  const auto& terms = detail::field(j, "terms");
  if (!terms.is_array()) fail(ErrorCode::ParseError, "terms must be an array");
  for (const auto& t : terms) x.add(path_from_json(*g, t), FieldTraits<Field>::parse(detail::str_field(t, "coeff")));
  return x;
}

inline Json monomial_to_json(const Graph& g, const Monomial& m) {
  Json j{{"p", edge_names(g, m.p)}, {"q", edge_names(g, m.q)}};
  if (m.p.edges.empty() && m.q.edges.empty()) j["vertex"] = g.vertex_name(m.p.base);
  return j;
}

inline Monomial monomial_from_json(const Graph& g, const Json& j) {
  auto p = detail::str_array(detail::field(j, "p"), "p");
  auto q = detail::str_array(detail::field(j, "q"), "q");
  if (p.empty() && q.empty()) {
    auto v = g.vertex_index(detail::str_field(j, "vertex"));
    return {vertex_path(v), vertex_path(v)};
  }
  Monomial m;
  if (!p.empty()) m.p = make_path(g, p);
  if (!q.empty()) m.q = make_path(g, q);
  if (p.empty()) m.p = vertex_path(path_target(g, m.q));
  if (q.empty()) m.q = vertex_path(path_target(g, m.p));
  if (path_target(g, m.p) != path_target(g, m.q)) fail(ErrorCode::InvalidWord, "monomial with t(p) != t(q)");
  return m;
}

template <class Field>
Json leavitt_element_to_json(const LeavittElement<Field>& x, const std::string& graph_name) {
  Json j;
  j["graph"] = graph_name;
  j["terms"] = Json::array();
  for (const auto& [m, c] : x.terms) {
    Json t = monomial_to_json(*x.graph, m);
    t["coeff"] = FieldTraits<Field>::str(c);
    j["terms"].push_back(t);
  }
  return j;
}

template <class Field>
LeavittElement<Field> leavitt_element_from_json(std::shared_ptr<const Graph> g, const Json& j) {
  LeavittElement<Field> x(g);
  const auto& terms = detail::field(j, "terms");
  if (!terms.is_array()) fail(ErrorCode::ParseError, "terms must be an array");
  for (const auto& t : terms) {
    x += leavitt_monomial<Field>(g, monomial_from_json(*g, t), FieldTraits<Field>::parse(detail::str_field(t, "coeff")));
  }
  return x;
}

inline Json pullback_report_to_json(const PullbackReport& r) {
  Json j;
  j["compatible"] = r.compatible;
  j["injective"] = r.injective;
  j["surjective"] = r.surjective;
  j["evidence_only"] = r.evidence_only;
  if (r.dims) {
    j["dims"] = {{"union", r.dims->union_dim.str()},
                 {"f1", r.dims->f1_dim.str()},
                 {"f2", r.dims->f2_dim.str()},
                 {"intersection", r.dims->intersection_dim.str()},
                 {"pullback", r.dims->pullback_dim.str()}};
  } else {
    j["dims"] = nullptr;
  }
  j["filtration_degree"] = r.filtration_degree;
  j["witnesses"] = r.witnesses;
  j["passed"] = r.passed();
  return j;
}

//! {"hereditary":[...],"saturated":[...],"admissible_subgraphs":[...]}
inline Json structure_report(const Graph& g) {
  Json j;
  auto subsets = [&](const std::vector<VertexSubset>& ss) {
    Json a = Json::array();
    for (const auto& s : ss) {
      auto names = subset_names(g, s);
      std::sort(names.begin(), names.end());
      a.push_back(names);
    }
    return a;
  };
  j["hereditary"] = subsets(hereditary_subsets(g));
  j["saturated"] = subsets(saturated_subsets(g));
  j["admissible_subgraphs"] = Json::array();
  for (const auto& h : hereditary_saturated_subsets(g)) {
    auto removed = subset_names(g, h);
    std::sort(removed.begin(), removed.end());
    j["admissible_subgraphs"].push_back({{"removed", removed}, {"graph", graph_to_json(subgraph_from_hereditary(g, h))}});
  }
  return j;
}

// ---------------------------------------------------------------------------
// DOT

namespace detail {
inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}
}  // namespace detail

//! Edges labelled by id; an infinite bundle is one bold edge labelled "∞".
inline std::string graph_to_dot(const Graph& g, const std::string& name = "G", const std::string& label = "") {
  std::ostringstream os;
  os << "digraph " << detail::dot_quote(name) << " {\n";
  if (!label.empty()) os << "  label=" << detail::dot_quote(label) << ";\n";
  for (const auto& v : g.vertices()) os << "  " << detail::dot_quote(v) << ";\n";
  for (const auto& e : g.edge_specs()) {
    os << "  " << detail::dot_quote(e.src) << " -> " << detail::dot_quote(e.dst) << " [label=" << detail::dot_quote(e.id)
       << "];\n";
  }
  for (const auto& b : g.bundle_specs()) {
    os << "  " << detail::dot_quote(b.src) << " -> " << detail::dot_quote(b.dst) << " [label=\"∞\", style=bold];\n";
  }
  os << "}\n";
  return os.str();
}

//! One digraph per step, labelled with the step kind and its count.
inline std::string trace_to_dot(const ReshapeTrace& t) {
  std::string out;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    out += graph_to_dot(s.snapshot, "step" + std::to_string(i) + "_" + to_string(s.kind),
                        to_string(s.kind) + ": " + s.count.str() + " paths of length " + std::to_string(t.k));
  }
  return out;
}

}  // namespace quiver
