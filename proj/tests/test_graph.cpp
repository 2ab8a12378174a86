#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace quiver;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::ParseError;
}

BigInt binom(std::size_t n, std::size_t k) {
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(BuildGraph, SingleLoop) {
  auto g = build_graph({"v"}, {{"e", "v", "v"}});
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(has_loop(g));
}

TEST(BuildGraph, EmptyGraph) {
  auto g = build_graph({}, {});
  EXPECT_TRUE(g.empty());
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(BuildGraph, Errors) {
  EXPECT_EQ(code_of([] { build_graph({"v"}, {{"e", "v", "w"}}); }), ErrorCode::DanglingEndpoint);
  EXPECT_EQ(code_of([] { build_graph({"v", "v"}, {}); }), ErrorCode::DuplicateId);
  EXPECT_EQ(code_of([] { build_graph({"v"}, {{"e", "v", "v"}, {"e", "v", "v"}}); }), ErrorCode::DuplicateId);
  EXPECT_EQ(code_of([] { build_graph({"v"}, {{"e*", "v", "v"}}); }), ErrorCode::StarIdCollision);
  EXPECT_EQ(code_of([] { build_graph({"v"}, {}, {{"v", "w"}}); }), ErrorCode::DanglingEndpoint);
  EXPECT_EQ(code_of([] { build_graph({""}, {}); }), ErrorCode::InvalidId);
}

TEST(BuildGraph, KeepsInsertionOrder) {
  auto g = build_graph({"b", "a"}, {{"z", "b", "a"}, {"y", "a", "b"}});
  EXPECT_EQ(g.vertices(), (std::vector<std::string>{"b", "a"}));
  EXPECT_EQ(g.edge(0).id, "z");
}

TEST(IsPath, Examples) {
  auto chain = fixtures::line(3);
  EXPECT_TRUE(is_path(chain, std::vector<std::string>{"e1", "e2"}));
  EXPECT_FALSE(is_path(chain, std::vector<std::string>{"e2", "e1"}));
  EXPECT_TRUE(is_path(fixtures::single_loop(), std::vector<std::string>{"l", "l"}));
  EXPECT_EQ(code_of([&] { is_path(chain, std::vector<std::string>{"nope"}); }), ErrorCode::UnknownEdge);
}

TEST(EnumeratePaths, Examples) {
  EXPECT_EQ(enumerate_paths(fixtures::single_loop(), 5).size(), 1u);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(enumerate_paths(fixtures::line(n + 1), n).size(), 1u);
  EXPECT_EQ(enumerate_paths(fixtures::looped_pair(), 3).size(), 16u);
  EXPECT_EQ(enumerate_paths(fixtures::looped_pair(), 0).size(), 2u);
}

TEST(EnumeratePaths, LexicographicOrderAndValidity) {
  auto g = fixtures::looped_pair();
  auto ps = enumerate_paths(g, 3);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    EXPECT_TRUE(is_path(g, ps[i].edges));
    if (i) EXPECT_LT(edge_names(g, ps[i - 1]), edge_names(g, ps[i]));
  }
}

TEST(EnumeratePaths, CapAndBundles) {
  EXPECT_EQ(code_of([] { enumerate_paths(fixtures::looped_pair(), 10, 100); }), ErrorCode::ResultCapExceeded);
  auto b = build_graph({"v", "w"}, {}, {{"v", "w"}});
  EXPECT_EQ(code_of([&] { enumerate_paths(b, 1); }), ErrorCode::InfiniteBundlePresent);
  EXPECT_EQ(code_of([&] { count_paths_bruteforce(b, 1); }), ErrorCode::InfiniteBundlePresent);
}

TEST(EnumerateAllFinitePaths, Examples) {
  auto chain = fixtures::line(3);
  auto all = enumerate_all_finite_paths(chain);
  EXPECT_EQ(all.size(), 6u);
  EXPECT_EQ(code_of([] { enumerate_all_finite_paths(fixtures::single_loop()); }), ErrorCode::HasLoop);
  EXPECT_TRUE(enumerate_all_finite_paths(build_graph({}, {})).empty());
}

TEST(HasLoop, Examples) {
  EXPECT_TRUE(has_loop(fixtures::single_loop()));
  EXPECT_FALSE(has_loop(fixtures::dag11()));
  EXPECT_TRUE(has_loop(fixtures::two_cycle()));
  // bundles count as connections
  EXPECT_TRUE(has_loop(build_graph({"v", "w"}, {{"e", "w", "v"}}, {{"v", "w"}})));
}

TEST(CountPathsBruteforce, Examples) {
  EXPECT_EQ(count_paths_bruteforce(fixtures::worked_example(), 3), 6);
  EXPECT_EQ(count_paths_bruteforce(fixtures::looped_chain(), 4), 11);
  auto g = fixtures::dag11();
  EXPECT_EQ(count_paths_bruteforce(g, 1), BigInt(g.edge_count()));
  EXPECT_EQ(count_paths_bruteforce(g, 0), BigInt(g.vertex_count()));
}

TEST(CountPathsBruteforce, DynamicProgrammingBranch) {
  // k > 20 switches to the vertex DP; 2^(k+1) for the looped pair
  auto g = fixtures::looped_pair();
  EXPECT_EQ(count_paths_bruteforce(g, 40), ipow(BigInt(2), 41));
  EXPECT_EQ(count_paths_bruteforce(g, 21), oracle::count_paths(g, 21));
}

TEST(Subpath, Examples) {
  auto g = fixtures::line(4);
  auto p = make_path(g, {"e1", "e2", "e3"});
  EXPECT_EQ(edge_names(g, subpath(g, p, 2, 1)), (std::vector<std::string>{"e2", "e3"}));
  EXPECT_EQ(edge_names(g, subpath(g, p, 1, 0)), (std::vector<std::string>{"e1"}));
  auto q = make_path(g, {"e1"});
  EXPECT_EQ(code_of([&] { subpath(g, q, 1, 1); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { subpath(g, q, 0, 0); }), ErrorCode::IndexOutOfRange);
}

TEST(LoopFromPermutation, Examples) {
  auto cyc = fixtures::two_cycle();
  auto p = make_path(cyc, {"ab", "ba"});
  auto loop = loop_from_permutation(cyc, p, {2, 1});
  ASSERT_TRUE(loop.has_value());
  EXPECT_EQ(path_source(cyc, *loop), path_target(cyc, *loop));
  EXPECT_GE(loop->length(), 1u);

  EXPECT_FALSE(loop_from_permutation(cyc, p, {1, 2}).has_value());

  auto chain = fixtures::line(3);
  auto q = make_path(chain, {"e1", "e2"});
  EXPECT_FALSE(is_path(chain, std::vector<std::string>{"e2", "e1"}));
  EXPECT_FALSE(loop_from_permutation(chain, q, {2, 1}).has_value());
  EXPECT_EQ(code_of([&] { loop_from_permutation(chain, q, {1, 1}); }), ErrorCode::InvalidPermutation);
  EXPECT_EQ(code_of([&] { loop_from_permutation(chain, q, {1}); }), ErrorCode::InvalidPermutation);
}

TEST(LoopFromPermutation, RecoversLoopsOnLoopyGraphs) {
  // Every non-identity permutation of a path that is again a path yields a loop.
  std::mt19937_64 rng(7);
  std::size_t found = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto g = fixtures::random_graph(rng, 3, 6, false);
    for (std::size_t len = 2; len <= 4; ++len) {
      for (const auto& p : enumerate_paths(g, len)) {
        std::vector<std::size_t> s(len);
        std::iota(s.begin(), s.end(), std::size_t{1});
        while (std::next_permutation(s.begin(), s.end())) {
          std::vector<std::size_t> permuted;
          for (auto x : s) permuted.push_back(p.edges[x - 1]);
          auto loop = loop_from_permutation(g, p, s);
          if (is_path(g, permuted)) {
            ASSERT_TRUE(loop.has_value());
            EXPECT_TRUE(is_path(g, loop->edges));
            EXPECT_EQ(path_source(g, *loop), path_target(g, *loop));
            ++found;
          } else {
            EXPECT_FALSE(loop.has_value());
          }
        }
      }
    }
  }
  EXPECT_GT(found, 0u);
}

TEST(Sinks, Examples) {
  EXPECT_EQ(sinks(fixtures::line(2)), (std::vector<std::string>{"v2"}));
  EXPECT_TRUE(sinks(fixtures::single_loop()).empty());
  EXPECT_EQ(sinks(fixtures::dag11()).size(), 1u);
  EXPECT_TRUE(sinks(build_graph({"v", "w"}, {}, {{"v", "w"}})) == std::vector<std::string>{"w"});
}

TEST(Connected, Examples) {
  EXPECT_TRUE(is_connected_undirected(fixtures::line(3)));
  EXPECT_FALSE(is_connected_undirected(build_graph({"a", "b"}, {})));
  EXPECT_TRUE(is_connected_undirected(build_graph({"a", "b"}, {}, {{"a", "b"}})));
  EXPECT_FALSE(is_connected_undirected(fixtures::worked_example()));
}

TEST(LongestPath, Examples) {
  auto chain = fixtures::line(6);
  EXPECT_EQ(longest_path(chain).length(), 5u);
  auto lp = longest_path(fixtures::worked_example());
  EXPECT_EQ(lp.length(), 3u);
  EXPECT_TRUE(is_path(fixtures::worked_example(), lp.edges));
  EXPECT_EQ(longest_path(build_graph({"v"}, {})).length(), 0u);
  EXPECT_EQ(code_of([] { longest_path(fixtures::single_loop()); }), ErrorCode::HasLoop);
}

// --- properties over random corpora -------------------------------------------

TEST(GraphProperties, CountsAgreeAndRespectBinomialBound) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = fixtures::random_graph(rng, 6, 8, true);
    const auto N = g.edge_count();
    for (std::size_t k = 1; k <= N; ++k) {
      auto ps = enumerate_paths(g, k);
      auto c = count_paths_bruteforce(g, k);
      EXPECT_EQ(BigInt(ps.size()), c);
      EXPECT_EQ(c, oracle::count_paths(g, k));
      EXPECT_LE(c, binom(N, k));
      for (const auto& p : ps) EXPECT_TRUE(is_path(g, p.edges));
    }
    if (N >= 2) {
      EXPECT_LE(count_paths_bruteforce(g, N - 1), 2);
    }
  }
}

TEST(GraphProperties, LoopFreeGraphsHaveNoPermutedPaths) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = fixtures::random_graph(rng, 7, 8, true);
    for (std::size_t len = 2; len <= 5; ++len) {
      for (const auto& p : enumerate_paths(g, len)) {
        std::vector<std::size_t> s(len);
        std::iota(s.begin(), s.end(), std::size_t{1});
        while (std::next_permutation(s.begin(), s.end())) EXPECT_FALSE(loop_from_permutation(g, p, s).has_value());
      }
    }
  }
}

TEST(GraphProperties, FinitePathSetExistsIffLoopFree) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = fixtures::random_graph(rng, 5, 6, false);
    if (has_loop(g)) {
      EXPECT_THROW(enumerate_all_finite_paths(g), Error);
    } else {
      auto all = enumerate_all_finite_paths(g);
      EXPECT_EQ(BigInt(all.size()), oracle::finite_path_count(g));
    }
  }
}

TEST(GraphProperties, OneSinkImpliesConnected) {
  std::mt19937_64 rng(14);
  int seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto g = fixtures::random_graph(rng, 6, 8, true);
    if (sinks(g).size() == 1) {
      ++seen;
      EXPECT_TRUE(is_connected_undirected(g));
    }
  }
  EXPECT_GT(seen, 10);
}
