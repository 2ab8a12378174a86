#pragma once

// The path algebra kE: basis FP(E), product = concatenation when the ends
// meet, zero otherwise.

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "quiver/canonical.hpp"
#include "quiver/combination.hpp"
#include "quiver/expression.hpp"
#include "quiver/extremal.hpp"
#include "quiver/graph.hpp"
#include "quiver/numeric.hpp"

namespace quiver {

template <class Field>
using PathElement = Combination<Path, Field>;

//! p followed by q, or nullopt when t(p) != s(q).
inline std::optional<Path> concat(const Graph& g, const Path& p, const Path& q) {
  if (path_target(g, p) != path_source(g, q)) return std::nullopt;
  Path r = p;
  if (p.edges.empty()) r.base = path_source(g, q);
  r.edges.insert(r.edges.end(), q.edges.begin(), q.edges.end());
  return r;
}

template <class Field>
PathElement<Field> basis_element(std::shared_ptr<const Graph> g, const Path& p, const Field& c = Field(1)) {
  PathElement<Field> x(std::move(g));
  x.add(p, c);
  return x;
}

template <class Field>
PathElement<Field> multiply(const PathElement<Field>& x, const PathElement<Field>& y) {
  x.check_same(y);
  PathElement<Field> out(x.graph);
  for (const auto& [p, a] : x.terms) {
    for (const auto& [q, b] : y.terms) {
      if (auto r = concat(*x.graph, p, q)) out.add(*r, a * b);
    }
  }
  return out;
}

//! |FP(E)|, or nullopt (infinite) when the graph has a loop.
inline std::optional<BigInt> dimension(const Graph& g) {
  detail::require_no_bundles(g, "dimension");
  auto order = topological_order(g);
  if (!order) return std::nullopt;
  std::vector<BigInt> from(g.vertex_count(), BigInt(1));
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    for (auto e : g.out_edges(*it)) from[*it] += from[g.edge(e).dst];
  }
  BigInt total = 0;
  for (const auto& x : from) total += x;
  return total;
}

//! Sum of the vertex idempotents. Always present for the finite graphs this
//! library represents; the optional mirrors "unital iff E^0 is finite".
template <class Field>
std::optional<PathElement<Field>> unit(std::shared_ptr<const Graph> g) {
  PathElement<Field> one(g);
  for (std::size_t v = 0; v < g->vertex_count(); ++v) one.add(vertex_path(v), Field(1));
  return one;
}

//! Structural test: no edges, or every edge is a self-loop and no vertex
//! carries two of them.
inline bool is_commutative(const Graph& g) {
  detail::require_no_bundles(g, "is_commutative");
  std::vector<std::size_t> loops(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    if (e.src != e.dst) return false;
    if (++loops[e.src] > 1) return false;
  }
  return true;
}

//! Paths of length <= max_len, in display order. Works on loopy graphs.
inline std::vector<Path> paths_up_to(const Graph& g, std::size_t max_len) {
  std::vector<Path> out;
  for (std::size_t k = 0; k <= max_len; ++k) {
    auto layer = enumerate_paths(g, k);
    if (layer.empty()) break;
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

//! pq = qp for every pair of basis paths of length <= max_len.
inline bool commutes_on_basis(const Graph& g, std::size_t max_len = 2) {
  auto basis = paths_up_to(g, max_len);
  for (const auto& p : basis) {
    for (const auto& q : basis) {
      if (concat(g, p, q) != concat(g, q, p)) return false;
    }
  }
  return true;
}

template <class Field>
bool is_idempotent(const PathElement<Field>& x) {
  return multiply(x, x) == x;
}

// ---------------------------------------------------------------------------
// Text form

//! Resolves a token to a vertex or edge. Ghost letters are rejected here.
inline Path path_letter(const Graph& g, const std::string& tok) {
  auto e = g.find_edge(tok);
  auto v = g.find_vertex(tok);
  if (e && v) fail(ErrorCode::InvalidWord, "'" + tok + "' names both a vertex and an edge");
  if (e) return Path{g.edge(*e).src, {*e}};
  if (v) return vertex_path(*v);
  fail(ErrorCode::InvalidWord, "unknown letter '" + tok + "'");
}

template <class Field>
PathElement<Field> parse_path_element(std::shared_ptr<const Graph> g, const std::string& text) {
  PathElement<Field> out(g);
  for (const auto& term : parse_expression(text)) {
    auto acc = basis_element<Field>(g, path_letter(*g, term.letters.front()),
                                    FieldTraits<Field>::parse(term.coeff));
    for (std::size_t i = 1; i < term.letters.size(); ++i) {
      acc = multiply(acc, basis_element<Field>(g, path_letter(*g, term.letters[i])));
    }
    out += acc;
  }
  return out;
}

namespace detail {
template <class Field>
std::string coeff_prefix(const Field& c, bool first, std::string& sign) {
  std::string s = FieldTraits<Field>::str(c);
  bool neg = !s.empty() && s[0] == '-';
  if (neg) s.erase(0, 1);
  sign = first ? (neg ? "- " : "") : (neg ? " - " : " + ");
  return s == "1" ? "" : s + " ";
}
}  // namespace detail

//! Terms in display order; a path prints as its edge ids, a vertex as its
//! name. Parses back with parse_path_element.
template <class Field>
std::string to_string(const PathElement<Field>& x) {
  if (x.is_zero()) return "0";
  std::vector<std::pair<Path, Field>> items(x.terms.begin(), x.terms.end());
  const Graph& g = *x.graph;
  std::sort(items.begin(), items.end(),
            [&](const auto& a, const auto& b) { return path_display_less(g, a.first, b.first); });
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::string sign;
    auto c = detail::coeff_prefix(items[i].second, i == 0, sign);
    std::string word;
    if (items[i].first.edges.empty()) {
      word = g.vertex_name(items[i].first.base);
    } else {
      for (std::size_t j = 0; j < items[i].first.edges.size(); ++j) {
        if (j) word += " ";
        word += g.edge(items[i].first.edges[j]).id;
      }
    }
    out += sign + c + word;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graphs with a given algebra dimension

inline constexpr std::size_t kDefaultDimBudget = 2'000'000;

namespace detail {
inline std::size_t dense_fp(const DenseMultigraph& d) {
  std::vector<std::size_t> memo(d.n, 0);
  std::vector<char> done(d.n, 0);
  std::function<std::size_t(std::size_t)> from = [&](std::size_t v) -> std::size_t {
    if (done[v]) return memo[v];
    std::size_t total = 1;
    for (std::size_t u = 0; u < d.n; ++u) {
      if (d.adj[v * d.n + u]) total += d.adj[v * d.n + u] * from(u);
    }
    done[v] = 1;
    return memo[v] = total;
  };
  std::size_t s = 0;
  for (std::size_t v = 0; v < d.n; ++v) s += from(v);
  return s;
}

inline bool dense_connected(const DenseMultigraph& d) {
  if (d.n <= 1) return true;
  std::vector<char> seen(d.n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (std::size_t u = 0; u < d.n; ++u) {
      if ((d.adj[v * d.n + u] || d.adj[u * d.n + v]) && !seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}
}  // namespace detail

//! Loop-free graphs with |FP| = d up to isomorphism, isolated vertices
//! allowed. With connected_only, only connected ones. Ordered by edge count,
//! then canonical key. Vertices are "1".."n" in canonical order with
//! isolated vertices last.
inline std::vector<Graph> enumerate_graphs_with_dim(std::size_t d, bool connected_only,
                                                    std::size_t budget = kDefaultDimBudget) {
  struct Core {
    DenseMultigraph g;
    std::size_t fp;
    std::string key;
  };
  std::vector<Core> cores{{DenseMultigraph{}, 0, "0|"}};
  std::vector<DenseMultigraph> level{DenseMultigraph{}};
  std::size_t examined = 0;
  // Adding an edge adds at least one path, so |FP| only grows.
  for (std::size_t edges = 0; !level.empty(); ++edges) {
    std::unordered_set<std::string> seen;
    std::vector<DenseMultigraph> next;
    for (const auto& base : level) {
      detail::for_each_extension(base, 2 * d + 2, [&](const DenseMultigraph& e) {
        if (++examined > budget) fail(ErrorCode::BudgetExceeded, "graph enumeration budget exhausted");
        auto fp = detail::dense_fp(e);
        if (fp > d) return;
        auto cf = canonical_form(e);
        if (!seen.insert(cf.key).second) return;
        cores.push_back({e, fp, cf.key});
        next.push_back(e);
      });
    }
    level = std::move(next);
  }
  std::sort(cores.begin(), cores.end(), [](const Core& a, const Core& b) {
    auto ea = std::accumulate(a.g.adj.begin(), a.g.adj.end(), 0u);
    auto eb = std::accumulate(b.g.adj.begin(), b.g.adj.end(), 0u);
    if (ea != eb) return ea < eb;
    return a.key < b.key;
  });
  std::vector<Graph> out;
  for (const auto& c : cores) {
    std::size_t pad = d - c.fp;
    if (connected_only) {
      bool ok = (pad == 0 && c.g.n > 0 && detail::dense_connected(c.g)) || (c.g.n == 0 && d == 1);
      if (!ok) continue;
    }
    Graph core = c.g.n ? canonical_graph(c.g) : Graph{};
    std::vector<std::string> vs = core.vertices();
    for (std::size_t i = 0; i < pad; ++i) vs.push_back(std::to_string(core.vertex_count() + i + 1));
    out.push_back(detail::assemble_from_specs(std::move(vs), core.edge_specs(), {}, false));
  }
  return out;
}

}  // namespace quiver
