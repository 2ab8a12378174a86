#include <gtest/gtest.h>

#include <map>
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

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

BigInt product(const std::vector<std::size_t>& v) {
  BigInt p = 1;
  for (auto x : v) p *= x;
  return p;
}

//! Loop-free random graph with all vertices related, as the pipeline sees it
//! after the first two steps.
Graph chained_random(std::mt19937_64& rng, std::size_t max_edges) {
  for (;;) {
    auto g = identify_unrelated(remove_isolated(fixtures::random_graph(rng, 6, max_edges, true)));
    if (g.edge_count() > 0) return g;
  }
}

}  // namespace

// --- bound ------------------------------------------------------------------------

TEST(OptimalBound, Examples) {
  EXPECT_EQ(optimal_bound(16, 3), 150);
  EXPECT_EQ(optimal_bound(11, 2), 30);
  for (std::size_t N = 1; N <= 12; ++N) {
    EXPECT_EQ(optimal_bound(N, N), 1);
    EXPECT_EQ(optimal_bound(N, 1), BigInt(N));
  }
  // 7 = 3*2 + 1, so 4 * 3.
  EXPECT_EQ(optimal_bound(7, 2), 12);
  EXPECT_EQ(code_of([] { optimal_bound(3, 4); }), ErrorCode::InvalidRange);
  EXPECT_EQ(code_of([] { optimal_bound(3, 0); }), ErrorCode::InvalidRange);
}

TEST(OptimalBound, MatchesBestCompositionProduct) {
  for (std::size_t N = 1; N <= 14; ++N) {
    for (std::size_t k = 1; k <= N; ++k) EXPECT_EQ(optimal_bound(N, k), oracle::best_composition_product(N, k));
  }
}

TEST(OptimalBound, PowerOfTwoRegime) {
  for (std::size_t N = 1; N <= 30; ++N) {
    for (std::size_t k = 1; k <= N; ++k) {
      if (k >= N - k) EXPECT_EQ(optimal_bound(N, k), ipow(BigInt(2), static_cast<unsigned>(N - k)));
    }
  }
}

TEST(OptimalBound, Decomposition) {
  auto d = bound_decomposition(16, 3);
  EXPECT_EQ(d.n, 5u);
  EXPECT_EQ(d.r, 1u);
  EXPECT_EQ(d.value, 150);
}

TEST(MaximizerGraph, Examples) {
  auto m = maximizer_graph(16, 3);
  EXPECT_EQ(thick_profile(m), (std::vector<std::size_t>{5, 5, 6}));
  EXPECT_EQ(count_paths_matrix(m, 3), 150);
  EXPECT_EQ(count_paths_bruteforce(m, 3), 150);
  EXPECT_EQ(thick_profile(maximizer_graph(4, 4)), (std::vector<std::size_t>{1, 1, 1, 1}));
  auto m52 = maximizer_graph(5, 2);
  EXPECT_EQ(thick_profile(m52), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(count_paths_matrix(m52, 2), 6);
  EXPECT_EQ(brute_force_max(5, 2).value, 6);
  EXPECT_THROW(maximizer_graph(2, 3), Error);
}

TEST(MaximizerGraph, AttainsBound) {
  for (std::size_t N = 1; N <= 20; ++N) {
    for (std::size_t k = 1; k <= N; ++k) {
      auto m = maximizer_graph(N, k);
      EXPECT_EQ(m.edge_count(), N);
      EXPECT_EQ(m.vertex_count(), k + 1);
      EXPECT_EQ(count_paths_matrix(m, k), optimal_bound(N, k));
    }
  }
}

// --- pipeline steps ----------------------------------------------------------------

TEST(RemoveIsolated, Examples) {
  auto g = build_graph({"a", "stray", "b"}, {{"e", "a", "b"}});
  auto r = remove_isolated(g);
  EXPECT_EQ(r.vertices(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(r.edge_count(), 1u);
  auto chain = fixtures::line(3);
  EXPECT_EQ(remove_isolated(chain), chain);
  EXPECT_TRUE(remove_isolated(build_graph({}, {})).empty());
}

TEST(IdentifyUnrelated, Examples) {
  auto two = build_graph({"a", "b", "c", "d"}, {{"e", "a", "b"}, {"f", "c", "d"}});
  auto r = identify_unrelated(two);
  EXPECT_LE(r.vertex_count(), 3u);
  EXPECT_EQ(count_paths_matrix(r, 1), 2);
  EXPECT_FALSE(has_loop(r));

  auto e1 = identify_unrelated(remove_isolated(fixtures::worked_example()));
  EXPECT_FALSE(has_loop(e1));
  EXPECT_EQ(e1.edge_count(), 16u);
  EXPECT_GE(count_paths_matrix(e1, 3), 6);
  // every vertex on one longest path
  EXPECT_EQ(longest_path(e1).length() + 1, e1.vertex_count());

  auto chain = fixtures::line(4);
  EXPECT_EQ(identify_unrelated(chain), chain);
  EXPECT_EQ(code_of([] { identify_unrelated(fixtures::two_cycle()); }), ErrorCode::HasLoop);
}

TEST(IdentifyUnrelated, MonotoneForEveryK) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    auto g = remove_isolated(fixtures::random_graph(rng, 7, 8, true));
    if (g.empty()) continue;
    auto r = identify_unrelated(g);
    EXPECT_FALSE(has_loop(r));
    EXPECT_EQ(r.edge_count(), g.edge_count());
    EXPECT_EQ(longest_path(r).length() + 1, r.vertex_count());
    for (std::size_t k = 1; k <= g.edge_count(); ++k) EXPECT_GE(oracle::count_paths(r, k), oracle::count_paths(g, k));
  }
}

TEST(ReshapeStages, CountsReplay) {
  for (const auto& s : fixtures::worked_stages()) {
    EXPECT_EQ(count_paths_matrix(s.graph, 3), s.count) << s.name;
    EXPECT_EQ(s.graph.edge_count(), 16u) << s.name;
  }
  EXPECT_EQ(count_paths_matrix(fixtures::worked_example(), 3), 6);
  EXPECT_EQ(fixtures::worked_example().edge_count(), 16u);
}

TEST(AlignAndSort, Examples) {
  auto thick = maximizer_graph(9, 3);
  EXPECT_EQ(align_and_sort(thick, 3), thick);
  EXPECT_TRUE(is_fk_form(thick, 3));

  auto e4 = align_and_sort(fixtures::stage_e1(), 3);
  EXPECT_TRUE(is_fk_form(e4, 3));
  EXPECT_GE(count_paths_matrix(e4, 3), 31);

  EXPECT_EQ(code_of([] { align_and_sort(fixtures::line(3), 3); }), ErrorCode::NoKPath);
}

TEST(AlignAndSort, MonotoneOnRandomInputs) {
  std::mt19937_64 rng(32);
  int done = 0;
  while (done < 50) {
    auto g = chained_random(rng, 9);
    std::size_t l = g.vertex_count() - 1;
    if (l < 1) continue;
    std::uniform_int_distribution<std::size_t> pick(1, l);
    std::size_t k = pick(rng);
    auto r = align_and_sort(g, k);
    EXPECT_TRUE(is_fk_form(r, k));
    EXPECT_GE(oracle::count_paths(r, k), oracle::count_paths(g, k));
    EXPECT_EQ(r.edge_count(), g.edge_count());
    EXPECT_FALSE(has_loop(r));
    ++done;
  }
}

TEST(MergeFront, ReshapeStages) {
  auto g5 = merge_front(fixtures::stage_f3(), 3);
  EXPECT_TRUE(isomorphic(g5, fixtures::stage_g5()));
  EXPECT_EQ(count_paths_matrix(g5, 3), 90);

  auto g3 = merge_front(align_and_sort(fixtures::stage_g4(), 3), 3);
  EXPECT_TRUE(isomorphic(g3, fixtures::stage_g3()));
  EXPECT_EQ(count_paths_matrix(g3, 3), 128);

  EXPECT_EQ(code_of([] { merge_front(maximizer_graph(9, 3), 3); }), ErrorCode::NotInFkForm);
  EXPECT_EQ(code_of([] { merge_front(fixtures::stage_g4(), 3); }), ErrorCode::NotInFkForm);
}

TEST(MergeFront, MonotoneAndShortens) {
  std::mt19937_64 rng(33);
  int done = 0;
  while (done < 40) {
    auto g = chained_random(rng, 10);
    std::size_t l = g.vertex_count() - 1;
    if (l < 2) continue;
    std::size_t k = l - 1;
    auto f = align_and_sort(g, k);
    auto m = merge_front(f, k);
    EXPECT_EQ(m.vertex_count() + 1, f.vertex_count());
    EXPECT_GE(oracle::count_paths(m, k), oracle::count_paths(f, k));
    EXPECT_EQ(m.edge_count(), g.edge_count());
    ++done;
  }
}

TEST(Redistribute, Examples) {
  EXPECT_EQ(sorted(redistribute({4, 4, 8})), (std::vector<std::size_t>{5, 5, 6}));
  EXPECT_EQ(redistribute({2, 2, 2}), (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_EQ(redistribute({1, 5}), (std::vector<std::size_t>{3, 3}));
  EXPECT_THROW(redistribute({}), Error);
}

TEST(Redistribute, MatchesExhaustiveOptimumAndBalances) {
  // every composition of N <= 10 into k parts
  for (std::size_t N = 1; N <= 10; ++N) {
    for (std::size_t k = 1; k <= N; ++k) {
      std::function<void(std::vector<std::size_t>&, std::size_t)> rec = [&](std::vector<std::size_t>& cur,
                                                                           std::size_t left) {
        if (cur.size() == k) {
          if (left != 0) return;
          auto r = redistribute(cur);
          auto d = bound_decomposition(N, k);
          std::map<std::size_t, std::size_t> hist;
          for (auto x : r) ++hist[x];
          EXPECT_EQ(hist[d.n + 1], d.r);
          EXPECT_EQ(product(r), oracle::best_composition_product(N, k));
          EXPECT_GE(product(r), product(cur));
          return;
        }
        for (std::size_t b = 1; b + (k - cur.size() - 1) <= left; ++b) {
          cur.push_back(b);
          rec(cur, left - b);
          cur.pop_back();
        }
      };
      std::vector<std::size_t> cur;
      rec(cur, N);
    }
  }
}

TEST(Redistribute, SingleMoveGainIsPositive) {
  // b_i b_j + b_i - b_j - 1 > 0 whenever b_i - b_j > 1
  for (std::size_t bi = 1; bi <= 20; ++bi) {
    for (std::size_t bj = 1; bj + 1 < bi; ++bj) {
      long long gain = static_cast<long long>((bi - 1) * (bj + 1)) - static_cast<long long>(bi * bj);
      EXPECT_GT(gain, 0);
      EXPECT_EQ(gain, static_cast<long long>(bi) - static_cast<long long>(bj) - 1);
    }
  }
}

// --- full pipeline -------------------------------------------------------------------

TEST(MaximizeWithTrace, WorkedExample) {
  auto t = maximize_with_trace(fixtures::worked_example(), 3);
  ASSERT_FALSE(t.steps.empty());
  EXPECT_EQ(t.steps.front().count, 6);
  EXPECT_EQ(t.steps.back().count, 150);
  for (std::size_t i = 1; i < t.steps.size(); ++i) EXPECT_GE(t.steps[i].count, t.steps[i - 1].count);
  auto c = verify_trace(t);
  EXPECT_TRUE(c.ok()) << c.detail;
  EXPECT_EQ(sorted(*thick_profile(t.steps.back().snapshot)), (std::vector<std::size_t>{5, 5, 6}));
}

TEST(MaximizeWithTrace, MaximizerIsFixedPoint) {
  for (std::size_t N = 1; N <= 12; ++N) {
    for (std::size_t k = 1; k <= N; ++k) {
      auto m = maximizer_graph(N, k);
      auto t = maximize_with_trace(m, k);
      EXPECT_EQ(t.steps.size(), 1u);
      EXPECT_EQ(canonical_key(t.steps.back().snapshot), canonical_key(m));
    }
  }
}

TEST(MaximizeWithTrace, RandomGraphsReachBruteForceOptimum) {
  std::mt19937_64 rng(34);
  std::map<std::pair<std::size_t, std::size_t>, BigInt> brute;
  int done = 0;
  while (done < 60) {
    auto g = fixtures::random_graph(rng, 7, 7, true);
    if (g.edge_count() == 0) continue;
    std::uniform_int_distribution<std::size_t> pick(1, g.edge_count());
    std::size_t k = pick(rng);
    auto key = std::make_pair(g.edge_count(), k);
    if (!brute.count(key)) brute[key] = brute_force_max(key.first, k).value;
    auto t = maximize_with_trace(g, k);
    EXPECT_EQ(t.steps.front().count, oracle::count_paths(g, k));
    EXPECT_EQ(t.steps.back().count, brute[key]);
    auto c = verify_trace(t);
    EXPECT_TRUE(c.ok()) << c.detail;
    for (const auto& s : t.steps) {
      EXPECT_EQ(s.snapshot.edge_count(), g.edge_count());
      EXPECT_FALSE(has_loop(s.snapshot));
      EXPECT_EQ(s.count, oracle::count_paths(s.snapshot, k));
    }
    ++done;
  }
}

TEST(MaximizeWithTrace, ShortLongestPathIsExtended) {
  // two parallel edges, k = 2: longest path 1 < k
  auto g = fixtures::multigraph({"a", "b"}, {{"a", "b", 2}});
  auto t = maximize_with_trace(g, 2);
  EXPECT_EQ(t.steps.back().count, 1);
  EXPECT_TRUE(verify_trace(t).ok());
}

TEST(MaximizeWithTrace, Errors) {
  EXPECT_EQ(code_of([] { maximize_with_trace(fixtures::two_cycle(), 1); }), ErrorCode::HasLoop);
  EXPECT_EQ(code_of([] { maximize_with_trace(fixtures::line(3), 3); }), ErrorCode::InvalidRange);
}

TEST(VerifyTrace, DetectsTampering) {
  auto t = maximize_with_trace(fixtures::worked_example(), 3);
  auto bad = t;
  std::swap(bad.steps[1], bad.steps[2]);
  EXPECT_FALSE(verify_trace(bad).monotone);
  auto wrong = t;
  wrong.steps.back().count += 1;
  EXPECT_FALSE(verify_trace(wrong).counts_match);
  auto unfinished = t;
  unfinished.steps.pop_back();
  EXPECT_FALSE(verify_trace(unfinished).final_optimal);
}

// --- brute force and canonical form ----------------------------------------------------

TEST(BruteForceMax, Examples) {
  EXPECT_EQ(brute_force_max(5, 2).value, 6);
  EXPECT_EQ(brute_force_max(4, 4).value, 1);
  EXPECT_EQ(brute_force_max(3, 2).value, 2);
  auto r = brute_force_max(5, 3);
  EXPECT_EQ(count_paths_matrix(r.witness, 3), r.value);
  EXPECT_EQ(r.witness.edge_count(), 5u);
  EXPECT_EQ(code_of([] { brute_force_max(6, 2, 0, 10); }), ErrorCode::SearchBudgetExceeded);
}

TEST(BruteForceMax, AgreesWithBound) {
  for (std::size_t N = 1; N <= 5; ++N) {
    for (std::size_t k = 1; k <= N; ++k) EXPECT_EQ(brute_force_max(N, k).value, optimal_bound(N, k)) << N << "," << k;
  }
  EXPECT_EQ(brute_force_max(6, 2).value, optimal_bound(6, 2));
  EXPECT_EQ(brute_force_max(6, 3).value, optimal_bound(6, 3));
}

TEST(BruteForceMax, Deterministic) {
  auto a = brute_force_max(5, 2), b = brute_force_max(5, 2);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.graphs_examined, b.graphs_examined);
}

TEST(Canonical, AgreesWithPermutationMinimum) {
  std::mt19937_64 rng(35);
  std::vector<Graph> corpus;
  for (int i = 0; i < 150; ++i) corpus.push_back(fixtures::random_graph(rng, 5, 6, i % 2 == 0));
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = i; j < corpus.size(); ++j) {
      bool ours = canonical_key(corpus[i]) == canonical_key(corpus[j]);
      bool ref = oracle::permutation_canonical(corpus[i]) == oracle::permutation_canonical(corpus[j]);
      EXPECT_EQ(ours, ref);
    }
  }
}

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = fixtures::random_graph(rng, 7, 10, trial % 2 == 0);
    std::vector<std::string> vs = g.vertices();
    std::shuffle(vs.begin(), vs.end(), rng);
    auto specs = g.edge_specs();
    std::shuffle(specs.begin(), specs.end(), rng);
    for (auto& e : specs) e.id = "r" + e.id;
    auto h = build_graph(vs, specs);
    EXPECT_EQ(canonical_key(g), canonical_key(h));
    EXPECT_TRUE(isomorphic(g, h));
  }
}

TEST(Canonical, RegularGraphsNeedIndividualization) {
  // directed 6-cycle vs two directed 3-cycles: same degrees everywhere
  auto c6 = build_graph({"0", "1", "2", "3", "4", "5"}, {{"a", "0", "1"},
                                                         {"b", "1", "2"},
                                                         {"c", "2", "3"},
                                                         {"d", "3", "4"},
                                                         {"e", "4", "5"},
                                                         {"f", "5", "0"}});
  auto c33 = build_graph({"0", "1", "2", "3", "4", "5"}, {{"a", "0", "1"},
                                                          {"b", "1", "2"},
                                                          {"c", "2", "0"},
                                                          {"d", "3", "4"},
                                                          {"e", "4", "5"},
                                                          {"f", "5", "3"}});
  EXPECT_FALSE(isomorphic(c6, c33));
  EXPECT_EQ(oracle::permutation_canonical(c6) == oracle::permutation_canonical(c33), false);
}
