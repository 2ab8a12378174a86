#pragma once

// Hand-entered graphs (the N = 16 reshaping example and small named shapes),
// plus small generators used by property tests.

#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "quiver/quiver.hpp"

namespace fixtures {

using quiver::BundleSpec;
using quiver::EdgeSpec;
using quiver::Graph;

struct Arc {
  std::string src, dst;
  int mult = 1;
};

//! Parallel arcs expand to edges named prefix1, prefix2, ...
inline Graph multigraph(std::vector<std::string> vertices, const std::vector<Arc>& arcs,
                        const std::string& prefix = "x") {
  std::vector<EdgeSpec> es;
  int n = 0;
  for (const auto& a : arcs) {
    for (int i = 0; i < a.mult; ++i) es.push_back({prefix + std::to_string(++n), a.src, a.dst});
  }
  return quiver::build_graph(std::move(vertices), es);
}

inline std::vector<std::string> numbered(int from, int to) {
  std::vector<std::string> v;
  for (int i = from; i <= to; ++i) v.push_back(std::to_string(i));
  return v;
}

// --- worked example, N = 16, k = 3 ----------------------------------------

//! Two components; the second uses vertex names 11..15.
inline Graph worked_example() {
  auto vs = numbered(1, 7);
  for (auto& s : numbered(11, 15)) vs.push_back(s);
  return multigraph(vs, {{"1", "4"}, {"1", "5"}, {"6", "2"}, {"1", "2", 2}, {"2", "3", 2}, {"3", "4"}, {"7", "4"},
                         {"11", "15"}, {"11", "12"}, {"13", "14"}, {"13", "15", 2}, {"14", "15", 2}});
}

inline std::vector<Arc> tail_arcs() {
  return {{"4", "5"}, {"5", "6"}, {"6", "7", 2}, {"4", "7"}, {"5", "7", 2}};
}

inline Graph with_tail(std::vector<Arc> head) {
  auto t = tail_arcs();
  head.insert(head.end(), t.begin(), t.end());
  return multigraph(numbered(1, 7), head);
}

inline Graph stage_e1() {
  return multigraph(numbered(1, 7), {{"1", "4"}, {"1", "2", 4}, {"2", "3", 2}, {"2", "4"}, {"3", "4"}, {"4", "5"},
                                     {"5", "6"}, {"6", "7"}, {"4", "7"}, {"5", "7", 2}, {"6", "7"}});
}
inline Graph stage_e2() { return with_tail({{"1", "2", 4}, {"2", "3", 2}, {"2", "4"}, {"3", "4", 2}}); }
inline Graph stage_e3() { return with_tail({{"1", "2", 4}, {"2", "3", 2}, {"3", "4", 3}}); }
inline Graph stage_e4() { return with_tail({{"1", "2", 2}, {"2", "3", 4}, {"3", "4", 3}}); }
inline Graph stage_f3() { return with_tail({{"1", "2", 2}, {"2", "3", 3}, {"3", "4", 4}}); }
inline Graph stage_g5() {
  return multigraph(numbered(2, 7),
                    {{"2", "3", 3}, {"3", "4", 4}, {"4", "5", 3}, {"5", "6"}, {"6", "7", 2}, {"4", "7"}, {"5", "7", 2}});
}
inline Graph stage_between() {
  return multigraph(numbered(2, 7), {{"2", "3", 3}, {"3", "4", 3}, {"4", "5", 4}, {"5", "6"}, {"6", "7", 2}, {"5", "7", 3}});
}
inline Graph stage_g4() {
  return multigraph(numbered(3, 7), {{"3", "4", 3}, {"4", "5", 4}, {"5", "6", 4}, {"6", "7", 2}, {"5", "7", 3}});
}
inline Graph stage_g3() { return multigraph(numbered(4, 7), {{"4", "5", 4}, {"5", "6", 4}, {"6", "7", 8}}); }

struct Stage {
  const char* name;
  Graph graph;
  int count;
};

inline std::vector<Stage> worked_stages() {
  return {{"E1", stage_e1(), 31},      {"E2", stage_e2(), 43}, {"E3", stage_e3(), 47},
          {"E4", stage_e4(), 59},      {"F3", stage_f3(), 62}, {"G5", stage_g5(), 90},
          {"between", stage_between(), 92}, {"G4", stage_g4(), 116}, {"G3", stage_g3(), 128}};
}

// --- small named graphs --------------------------------------------------------------

//! Two vertices, a self-loop on each, one edge each way.
inline Graph looped_pair() {
  return quiver::build_graph({"a", "b"}, {{"la", "a", "a"}, {"lb", "b", "b"}, {"ab", "a", "b"}, {"ba", "b", "a"}});
}

//! Loop-free, 11 edges; 15 paths of length 2.
inline Graph dag11() {
  return multigraph({"4", "0", "1", "2", "3"}, {{"4", "0"}, {"4", "3"}, {"4", "1"}, {"0", "2", 2}, {"0", "3"},
                                                {"1", "0"}, {"1", "2"}, {"1", "3"}, {"3", "2", 2}});
}

inline Graph looped_triangle() {
  return quiver::build_graph({"p", "v", "w"}, {{"lp", "p", "p"},
                                               {"pw1", "p", "w"},
                                               {"pw2", "p", "w"},
                                               {"pv", "p", "v"},
                                               {"lw", "w", "w"},
                                               {"vw", "v", "w"}});
}

//! v -e-> w
inline Graph line1() { return quiver::build_graph({"v", "w"}, {{"e", "v", "w"}}); }

inline Graph loop_two_sinks() {
  return quiver::build_graph({"v1", "v2", "v3"}, {{"c", "v1", "v1"}, {"a", "v1", "v2"}, {"b", "v1", "v3"}});
}

//! v1 -e-> v2 <-f- v3
inline Graph two_sources() { return quiver::build_graph({"v1", "v2", "v3"}, {{"e", "v1", "v2"}, {"f", "v3", "v2"}}); }

inline Graph looped_chain() {
  return quiver::build_graph({"a", "b", "c"},
                             {{"la", "a", "a"}, {"lb", "b", "b"}, {"ab", "a", "b"}, {"ac", "a", "c"}, {"bc", "b", "c"}});
}

inline Graph double_loop_fan() {
  return quiver::build_graph({"v1", "v2", "v3", "v4"}, {{"l1", "v1", "v1"},
                                                        {"l2", "v2", "v2"},
                                                        {"a", "v1", "v2"},
                                                        {"b", "v1", "v3"},
                                                        {"c", "v1", "v4"},
                                                        {"d", "v2", "v3"},
                                                        {"f", "v2", "v4"}});
}

//! Two parallel edges v => w.
inline Graph parallel_pair() { return quiver::build_graph({"v", "w"}, {{"e", "v", "w"}, {"f", "v", "w"}}); }

//! Connected graphs with a 6-dimensional path algebra.
inline std::vector<Graph> connected_dim6_graphs() {
  return {multigraph({"0", "1"}, {{"0", "1", 4}}), multigraph({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}}),
          multigraph({"0", "1", "2"}, {{"0", "1", 2}, {"2", "1"}}), multigraph({"0", "1", "2"}, {{"1", "0", 2}, {"1", "2"}})};
}

//! All graphs with a 5-dimensional path algebra.
inline std::vector<Graph> dim5_graphs() {
  return {multigraph(numbered(0, 4), {}),
          multigraph(numbered(0, 3), {{"0", "1"}}),
          multigraph(numbered(0, 2), {{"0", "1", 2}}),
          multigraph(numbered(0, 2), {{"1", "0"}, {"1", "2"}}),
          multigraph(numbered(0, 2), {{"0", "1"}, {"2", "1"}}),
          multigraph(numbered(0, 1), {{"0", "1", 3}})};
}

// --- intersections and unions ----------------------------------------------

struct Pair {
  const char* name;
  Graph f, g;
  bool intersection_admissible;
};

inline std::vector<Pair> intersection_examples() {
  using quiver::build_graph;
  return {
      {"shared loop", build_graph({"v", "w1"}, {{"e", "v", "v"}, {"g1", "v", "w1"}}),
       build_graph({"v", "w2"}, {{"e", "v", "v"}, {"g2", "v", "w2"}}), true},
      {"opposite bundles", build_graph({"w1", "v"}, {}, {{"v", "w1"}}), build_graph({"v", "w2"}, {}, {{"v", "w2"}}), true},
      {"not saturated", build_graph({"w1", "v"}, {{"e1", "v", "w1"}}), build_graph({"v", "w2"}, {{"e2", "v", "w2"}}),
       false},
      {"not hereditary", build_graph({"w1", "v"}, {{"e1", "w1", "v"}}), build_graph({"v", "w2"}, {{"e2", "w2", "v"}}),
       false},
      {"missing edge", build_graph({"v", "w"}, {{"e1", "v", "w"}, {"e2", "v", "w"}}),
       build_graph({"v", "w"}, {{"e3", "v", "w"}, {"e2", "v", "w"}}), false},
  };
}

//! Union admissible, intersection not.
inline Pair union_only_pair() {
  return {"union-only", quiver::build_graph({"w1", "v"}, {}, {{"v", "w1"}}), quiver::build_graph({"v", "w2"}, {{"e", "v", "w2"}}),
          false};
}

// --- generators --------------------------------------------------------------

inline Graph line(std::size_t n) {
  std::vector<std::string> vs;
  std::vector<EdgeSpec> es;
  for (std::size_t i = 1; i <= n; ++i) vs.push_back("v" + std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) es.push_back({"e" + std::to_string(i), vs[i - 1], vs[i]});
  return quiver::build_graph(vs, es);
}

inline Graph single_loop() { return quiver::build_graph({"v"}, {{"l", "v", "v"}}); }

inline Graph two_cycle() { return quiver::build_graph({"a", "b"}, {{"ab", "a", "b"}, {"ba", "b", "a"}}); }

//! Random multigraph; with acyclic set, edges only go from lower to higher index.
inline Graph random_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges, bool acyclic,
                          const std::string& vprefix = "v", const std::string& eprefix = "e") {
  std::uniform_int_distribution<std::size_t> nv(acyclic ? 2 : 1, max_vertices);
  std::size_t n = nv(rng);
  std::uniform_int_distribution<std::size_t> ne(0, max_edges);
  std::size_t m = ne(rng);
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back(vprefix + std::to_string(i));
  std::vector<EdgeSpec> es;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t i = 0; i < m; ++i) {
    auto a = pick(rng), b = pick(rng);
    if (acyclic) {
      if (a == b) continue;
      if (a > b) std::swap(a, b);
    }
    es.push_back({eprefix + std::to_string(i), vs[a], vs[b]});
  }
  return quiver::build_graph(vs, es);
}

}  // namespace fixtures
