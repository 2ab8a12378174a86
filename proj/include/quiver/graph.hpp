#pragma once

// Finite directed multigraphs and their paths.
//
// "Loop" throughout this library means a directed cycle of any length >= 1,
// not only a self-loop. A graph with the cycle v -> w -> v has a loop.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quiver/error.hpp"
#include "quiver/numeric.hpp"

namespace quiver {

struct EdgeSpec {
  std::string id;
  std::string src;
  std::string dst;
  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

struct BundleSpec {
  std::string src;
  std::string dst;
  friend bool operator==(const BundleSpec&, const BundleSpec&) = default;
};

struct Edge {
  std::string id;
  std::size_t src = 0;
  std::size_t dst = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

//! Marker for an infinite family of parallel edges src -> dst. Only the
//! structure checks look at these; path machinery rejects them.
struct Bundle {
  std::size_t src = 0;
  std::size_t dst = 0;
  friend bool operator==(const Bundle&, const Bundle&) = default;
};

class Graph;
Graph build_graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges,
                  const std::vector<BundleSpec>& bundles = {});

namespace detail {
Graph assemble(std::vector<std::string> vertices, std::vector<Edge> edges,
               std::vector<Bundle> bundles, bool allow_star);
}  // namespace detail

//! Immutable validated multigraph. Vertices and edges keep insertion order;
//! `edges_by_id()` and `out_edges()` expose lexicographic id order.
class Graph {
 public:
  Graph() = default;

  [[nodiscard]] std::size_t vertex_count() const noexcept { return vertices_.size(); }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
  [[nodiscard]] bool empty() const noexcept { return vertices_.empty(); }
  [[nodiscard]] bool has_bundles() const noexcept { return !bundles_.empty(); }

  [[nodiscard]] const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] const std::vector<Bundle>& bundles() const noexcept { return bundles_; }

  [[nodiscard]] const std::string& vertex_name(std::size_t v) const { return vertices_.at(v); }
  [[nodiscard]] const Edge& edge(std::size_t e) const { return edges_.at(e); }

  [[nodiscard]] std::optional<std::size_t> find_vertex(const std::string& name) const {
    auto it = vindex_.find(name);
    if (it == vindex_.end()) return std::nullopt;
    return it->second;
  }
  [[nodiscard]] std::optional<std::size_t> find_edge(const std::string& id) const {
    auto it = eindex_.find(id);
    if (it == eindex_.end()) return std::nullopt;
    return it->second;
  }
  [[nodiscard]] std::size_t vertex_index(const std::string& name) const {
    auto v = find_vertex(name);
    if (!v) fail(ErrorCode::UnknownVertex, "no vertex '" + name + "'");
    return *v;
  }
  [[nodiscard]] std::size_t edge_index(const std::string& id) const {
    auto e = find_edge(id);
    if (!e) fail(ErrorCode::UnknownEdge, "no edge '" + id + "'");
    return *e;
  }

  //! Edges leaving v, sorted by id.
  [[nodiscard]] const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_.at(v); }
  //! Edges entering v, sorted by id.
  [[nodiscard]] const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_.at(v); }
  //! All edges sorted by id.
  [[nodiscard]] const std::vector<std::size_t>& edges_by_id() const noexcept { return by_id_; }
  //! Position of edge e in `edges_by_id()`.
  [[nodiscard]] std::size_t id_rank(std::size_t e) const { return rank_.at(e); }

  [[nodiscard]] bool emits_bundle(std::size_t v) const {
    return std::any_of(bundles_.begin(), bundles_.end(),
                       [v](const Bundle& b) { return b.src == v; });
  }

  [[nodiscard]] std::vector<EdgeSpec> edge_specs() const {
    std::vector<EdgeSpec> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back({e.id, vertices_[e.src], vertices_[e.dst]});
    return out;
  }
  [[nodiscard]] std::vector<BundleSpec> bundle_specs() const {
    std::vector<BundleSpec> out;
    for (const auto& b : bundles_) out.push_back({vertices_[b.src], vertices_[b.dst]});
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ && a.bundles_ == b.bundles_;
  }

 private:
  friend Graph detail::assemble(std::vector<std::string>, std::vector<Edge>, std::vector<Bundle>,
                                bool);

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<Bundle> bundles_;
  std::unordered_map<std::string, std::size_t> vindex_;
  std::unordered_map<std::string, std::size_t> eindex_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::size_t> by_id_;
  std::vector<std::size_t> rank_;
};

namespace detail {

inline Graph assemble(std::vector<std::string> vertices, std::vector<Edge> edges,
                      std::vector<Bundle> bundles, bool allow_star) {
  Graph g;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].empty()) fail(ErrorCode::InvalidId, "empty vertex id");
    if (!g.vindex_.emplace(vertices[i], i).second) {
      fail(ErrorCode::DuplicateId, "vertex '" + vertices[i] + "' repeated");
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.id.empty()) fail(ErrorCode::InvalidId, "empty edge id");
    if (!allow_star && e.id.find('*') != std::string::npos) {
      fail(ErrorCode::StarIdCollision, "edge id '" + e.id + "' uses the reserved '*'");
    }
    if (e.src >= vertices.size() || e.dst >= vertices.size()) {
      fail(ErrorCode::DanglingEndpoint, "edge '" + e.id + "' has an endpoint outside the graph");
    }
    if (!g.eindex_.emplace(e.id, i).second) {
      fail(ErrorCode::DuplicateId, "edge '" + e.id + "' repeated");
    }
  }
  for (const auto& b : bundles) {
    if (b.src >= vertices.size() || b.dst >= vertices.size()) {
      fail(ErrorCode::DanglingEndpoint, "infinite bundle has an endpoint outside the graph");
    }
  }
  std::sort(bundles.begin(), bundles.end(), [](const Bundle& a, const Bundle& b) {
    return std::pair(a.src, a.dst) < std::pair(b.src, b.dst);
  });
  bundles.erase(std::unique(bundles.begin(), bundles.end()), bundles.end());

  g.by_id_.resize(edges.size());
  std::iota(g.by_id_.begin(), g.by_id_.end(), std::size_t{0});
  std::sort(g.by_id_.begin(), g.by_id_.end(),
            [&](std::size_t a, std::size_t b) { return edges[a].id < edges[b].id; });
  g.rank_.assign(edges.size(), 0);
  for (std::size_t r = 0; r < g.by_id_.size(); ++r) g.rank_[g.by_id_[r]] = r;
  g.out_.assign(vertices.size(), {});
  g.in_.assign(vertices.size(), {});
  for (std::size_t e : g.by_id_) {
    g.out_[edges[e].src].push_back(e);
    g.in_[edges[e].dst].push_back(e);
  }
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  g.bundles_ = std::move(bundles);
  return g;
}

inline Graph assemble_from_specs(std::vector<std::string> vertices,
                                 const std::vector<EdgeSpec>& edges,
                                 const std::vector<BundleSpec>& bundles, bool allow_star) {
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < vertices.size(); ++i) idx.emplace(vertices[i], i);
  auto lookup = [&](const std::string& name, const std::string& what) {
    auto it = idx.find(name);
    if (it == idx.end()) {
      fail(ErrorCode::DanglingEndpoint, what + " references unknown vertex '" + name + "'");
    }
    return it->second;
  };
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& e : edges) {
    es.push_back({e.id, lookup(e.src, "edge '" + e.id + "'"), lookup(e.dst, "edge '" + e.id + "'")});
  }
  std::vector<Bundle> bs;
  for (const auto& b : bundles) {
    bs.push_back({lookup(b.src, "infinite bundle"), lookup(b.dst, "infinite bundle")});
  }
  return assemble(std::move(vertices), std::move(es), std::move(bs), allow_star);
}

}  // namespace detail

//! Validated construction from names. Edge ids may not contain '*'; that
//! suffix is reserved for ghost edges of the extended graph.
inline Graph build_graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges,
                         const std::vector<BundleSpec>& bundles) {
  return detail::assemble_from_specs(std::move(vertices), edges, bundles, false);
}

// ---------------------------------------------------------------------------
// Paths

//! Edge indices into a particular graph. `base` is the source vertex; for a
//! length-0 path it is the path itself.
struct Path {
  std::size_t base = 0;
  std::vector<std::size_t> edges;

  [[nodiscard]] std::size_t length() const noexcept { return edges.size(); }

  friend bool operator==(const Path&, const Path&) = default;
  friend bool operator<(const Path& a, const Path& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    if (a.edges != b.edges) return a.edges < b.edges;
    return a.base < b.base;
  }
};

inline Path vertex_path(std::size_t v) { return Path{v, {}}; }

inline std::size_t path_source(const Graph& g, const Path& p) {
  return p.edges.empty() ? p.base : g.edge(p.edges.front()).src;
}
inline std::size_t path_target(const Graph& g, const Path& p) {
  return p.edges.empty() ? p.base : g.edge(p.edges.back()).dst;
}

inline std::vector<std::string> edge_names(const Graph& g, const Path& p) {
  std::vector<std::string> out;
  for (auto e : p.edges) out.push_back(g.edge(e).id);
  return out;
}

//! "v" for a length-0 path, "(a,b,c)" otherwise.
inline std::string path_to_string(const Graph& g, const Path& p) {
  if (p.edges.empty()) return g.vertex_name(p.base);
  std::string s = "(";
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) s += ",";
    s += g.edge(p.edges[i]).id;
  }
  return s + ")";
}

//! Orders paths by length, then lexicographically by edge ids, then by vertex
//! insertion order for length 0.
inline bool path_display_less(const Graph& g, const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  for (std::size_t i = 0; i < a.length(); ++i) {
    auto ra = g.id_rank(a.edges[i]), rb = g.id_rank(b.edges[i]);
    if (ra != rb) return ra < rb;
  }
  return a.base < b.base;
}

inline bool is_path(const Graph& g, const std::vector<std::size_t>& edges) {
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (g.edge(edges[i]).dst != g.edge(edges[i + 1]).src) return false;
  }
  return true;
}

//! True iff consecutive edges meet head to tail. Unknown ids raise UnknownEdge.
inline bool is_path(const Graph& g, const std::vector<std::string>& edge_ids) {
  std::vector<std::size_t> idx;
  idx.reserve(edge_ids.size());
  for (const auto& id : edge_ids) idx.push_back(g.edge_index(id));
  return is_path(g, idx);
}

//! Builds a Path from edge ids, checking coherence.
inline Path make_path(const Graph& g, const std::vector<std::string>& edge_ids) {
  if (edge_ids.empty()) fail(ErrorCode::InvalidRange, "use vertex_path for length-0 paths");
  Path p;
  for (const auto& id : edge_ids) p.edges.push_back(g.edge_index(id));
  if (!is_path(g, p.edges)) fail(ErrorCode::InvalidRange, "edges do not form a path");
  p.base = g.edge(p.edges.front()).src;
  return p;
}

inline constexpr std::size_t kDefaultPathCap = 10'000'000;

namespace detail {
inline void require_no_bundles(const Graph& g, const char* op) {
  if (g.has_bundles()) fail(ErrorCode::InfiniteBundlePresent, std::string(op) + " needs a graph without infinite bundles");
}
}  // namespace detail

//! Successors of each vertex, counting an infinite bundle as one edge.
inline std::vector<std::vector<std::size_t>> successor_lists(const Graph& g, bool with_bundles = true) {
  std::vector<std::vector<std::size_t>> succ(g.vertex_count());
  for (const auto& e : g.edges()) succ[e.src].push_back(e.dst);
  if (with_bundles) {
    for (const auto& b : g.bundles()) succ[b.src].push_back(b.dst);
  }
  return succ;
}

//! Kahn order preferring the smallest vertex index; nullopt when a loop exists.
inline std::optional<std::vector<std::size_t>> topological_order(const Graph& g) {
  auto succ = successor_lists(g);
  std::vector<std::size_t> indeg(g.vertex_count(), 0);
  for (const auto& s : succ) {
    for (auto w : s) ++indeg[w];
  }
  std::vector<std::size_t> order;
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    auto it = std::min_element(ready.begin(), ready.end());
    std::size_t v = *it;
    ready.erase(it);
    order.push_back(v);
    for (auto w : succ[v]) {
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  if (order.size() != g.vertex_count()) return std::nullopt;
  return order;
}

//! Directed cycle detection; an infinite bundle counts as one edge.
inline bool has_loop(const Graph& g) { return !topological_order(g).has_value(); }

//! reach[v][w] iff a directed path of length >= 1 leads from v to w.
inline std::vector<std::vector<char>> reachability(const Graph& g, bool with_bundles = true) {
  auto succ = successor_lists(g, with_bundles);
  std::size_t n = g.vertex_count();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> stack(succ[v].begin(), succ[v].end());
    while (!stack.empty()) {
      auto w = stack.back();
      stack.pop_back();
      if (reach[v][w]) continue;
      reach[v][w] = 1;
      for (auto x : succ[w]) stack.push_back(x);
    }
  }
  return reach;
}

//! All paths of length exactly k in lexicographic edge-id order. k = 0 gives
//! one path per vertex.
inline std::vector<Path> enumerate_paths(const Graph& g, std::size_t k,
                                         std::size_t cap = kDefaultPathCap) {
  detail::require_no_bundles(g, "enumerate_paths");
  std::vector<Path> out;
  if (k == 0) {
    if (g.vertex_count() > cap) fail(ErrorCode::ResultCapExceeded, "path cap exceeded");
    for (std::size_t v = 0; v < g.vertex_count(); ++v) out.push_back(vertex_path(v));
    return out;
  }
  Path cur;
  std::function<void(std::size_t)> dfs = [&](std::size_t v) {
    if (cur.edges.size() == k) {
      if (out.size() >= cap) fail(ErrorCode::ResultCapExceeded, "path cap exceeded");
      out.push_back(cur);
      return;
    }
    for (auto e : g.out_edges(v)) {
      cur.edges.push_back(e);
      dfs(g.edge(e).dst);
      cur.edges.pop_back();
    }
  };
  for (auto e : g.edges_by_id()) {
    cur.base = g.edge(e).src;
    cur.edges.assign(1, e);
    dfs(g.edge(e).dst);
  }
  return out;
}

//! FP(E) grouped by length, vertices first. Raises HasLoop when infinite.
inline std::vector<Path> enumerate_all_finite_paths(const Graph& g,
                                                    std::size_t cap = kDefaultPathCap) {
  detail::require_no_bundles(g, "enumerate_all_finite_paths");
  if (has_loop(g)) fail(ErrorCode::HasLoop, "FP(E) is infinite when the graph has a loop");
  std::vector<Path> all;
  for (std::size_t k = 0;; ++k) {
    auto layer = enumerate_paths(g, k, cap - std::min(cap, all.size()));
    if (layer.empty()) break;
    all.insert(all.end(), layer.begin(), layer.end());
  }
  return all;
}

//! Number of k-paths. Plain DFS up to k = 20, vertex dynamic programming above.
inline BigInt count_paths_bruteforce(const Graph& g, std::size_t k) {
  detail::require_no_bundles(g, "count_paths_bruteforce");
  if (k == 0) return BigInt(g.vertex_count());
  if (k > 20) {
    std::vector<BigInt> ways(g.vertex_count(), BigInt(1));
    for (std::size_t step = 0; step < k; ++step) {
      std::vector<BigInt> next(g.vertex_count(), BigInt(0));
      for (const auto& e : g.edges()) next[e.src] += ways[e.dst];
      ways = std::move(next);
    }
    BigInt total = 0;
    for (const auto& w : ways) total += w;
    return total;
  }
  std::function<std::uint64_t(std::size_t, std::size_t)> dfs = [&](std::size_t v,
                                                                     std::size_t left) -> std::uint64_t {
    if (left == 0) return 1;
    std::uint64_t n = 0;
    for (auto e : g.out_edges(v)) n += dfs(g.edge(e).dst, left - 1);
    return n;
  };
  BigInt total = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) total += dfs(v, k);
  return total;
}

//! (e_i, ..., e_{i+k}) with 1-based i; k is an offset, so k = 0 yields the
//! single edge e_i.
inline Path subpath(const Graph& g, const Path& p, std::size_t i, std::size_t k) {
  if (i < 1 || i > p.length() || k > p.length() - i) {
    fail(ErrorCode::IndexOutOfRange, "subpath(" + std::to_string(i) + "," + std::to_string(k) +
                                         ") of a path of length " + std::to_string(p.length()));
  }
  Path out;
  out.edges.assign(p.edges.begin() + static_cast<std::ptrdiff_t>(i - 1),
                   p.edges.begin() + static_cast<std::ptrdiff_t>(i + k));
  out.base = g.edge(out.edges.front()).src;
  return out;
}

//! If the edges of `p` permuted by sigma (1-based images) still form a path,
//! extracts a loop from it; nullopt for the identity or a non-path.
inline std::optional<Path> loop_from_permutation(const Graph& g, const Path& p,
                                                 const std::vector<std::size_t>& sigma) {
  const std::size_t n = p.length();
  if (sigma.size() != n) fail(ErrorCode::InvalidPermutation, "permutation size differs from path length");
  std::vector<std::size_t> inv(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma[i] < 1 || sigma[i] > n || inv[sigma[i]] != 0) {
      fail(ErrorCode::InvalidPermutation, "sigma is not a bijection of {1..n}");
    }
    inv[sigma[i]] = i + 1;
  }
  if (!is_path(g, p.edges)) fail(ErrorCode::InvalidRange, "input is not a path");
  std::size_t j = 0;
  while (j < n && sigma[j] == j + 1) ++j;
  if (j == n) return std::nullopt;

  std::vector<std::size_t> permuted(n);
  for (std::size_t i = 0; i < n; ++i) permuted[i] = p.edges[sigma[i] - 1];
  if (!is_path(g, permuted)) return std::nullopt;

  // 1-based: j1 is the first moved index, sigma(j1) > j1, and e_{j1} sits at
  // position sigma^{-1}(j1) of the permuted sequence.
  const std::size_t j1 = j + 1;
  const std::size_t sj = sigma[j];
  Path loop;
  for (std::size_t pos = j1; pos <= inv[j1]; ++pos) loop.edges.push_back(permuted[pos - 1]);
  for (std::size_t idx = j1 + 1; idx + 1 <= sj; ++idx) loop.edges.push_back(p.edges[idx - 1]);
  loop.base = g.edge(loop.edges.front()).src;
  if (!is_path(g, loop.edges) || path_source(g, loop) != path_target(g, loop)) return std::nullopt;
  return loop;
}

//! Vertices emitting neither an edge nor an infinite bundle, in vertex order.
inline std::vector<std::string> sinks(const Graph& g) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.out_edges(v).empty() && !g.emits_bundle(v)) out.push_back(g.vertex_name(v));
  }
  return out;
}

inline bool is_connected_undirected(const Graph& g) {
  std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  for (const auto& e : g.edges()) unite(e.src, e.dst);
  for (const auto& b : g.bundles()) unite(b.src, b.dst);
  std::size_t root = find(0);
  for (std::size_t v = 1; v < n; ++v) {
    if (find(v) != root) return false;
  }
  return true;
}

//! A longest path; among those, the lexicographically smallest edge-id
//! sequence. An edgeless graph yields the length-0 path at its first vertex.
inline Path longest_path(const Graph& g) {
  detail::require_no_bundles(g, "longest_path");
  if (g.empty()) fail(ErrorCode::EmptyGraph, "longest_path of the empty graph");
  auto order = topological_order(g);
  if (!order) fail(ErrorCode::HasLoop, "longest_path needs a loop-free graph");
  std::vector<std::size_t> height(g.vertex_count(), 0);
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    for (auto e : g.out_edges(*it)) height[*it] = std::max(height[*it], height[g.edge(e).dst] + 1);
  }
  std::size_t best = *std::max_element(height.begin(), height.end());
  if (best == 0) return vertex_path(0);
  Path p;
  std::size_t need = best;
  for (auto e : g.edges_by_id()) {
    if (height[g.edge(e).src] == best && height[g.edge(e).dst] + 1 == best) {
      p.edges.push_back(e);
      break;
    }
  }
  p.base = g.edge(p.edges.front()).src;
  std::size_t v = g.edge(p.edges.front()).dst;
  --need;
  while (need > 0) {
    for (auto e : g.out_edges(v)) {
      if (height[g.edge(e).dst] + 1 == need) {
        p.edges.push_back(e);
        v = g.edge(e).dst;
        break;
      }
    }
    --need;
  }
  return p;
}

}  // namespace quiver
