#include <gtest/gtest.h>

#include "mewc/instance_io.hpp"
#include "mewc/pls.hpp"
#include "mewc/solver.hpp"
#include "test_support.hpp"

using namespace mewc;
using namespace mewc::testing;

TEST(Pls, EdgelessGraph) {
  const auto r = pls(WeightedGraph(6, {}), PlsConfig{});
  EXPECT_EQ(r.weight, 0);
  EXPECT_TRUE(is_clique(WeightedGraph(6, {}), r.clique));
}

TEST(Pls, CompleteGraphTakesEverything) {
  const auto r = pls(complete_graph(5, 3), PlsConfig{});
  EXPECT_EQ(r.clique.count(), 5U);
  EXPECT_EQ(r.weight, 30);
}

TEST(Pls, WorkedExampleFindsOptimum) {
  const auto r = pls(gex_edges_only(), PlsConfig{});
  EXPECT_EQ(r.weight, 19);
  EXPECT_EQ(r.clique.to_vector(), (std::vector<Vertex>{3, 4, 5}));
}

TEST(Pls, Johnson16_2_4) {
  const auto g = load_dimacs_weighted("johnson16-2-4");
  const auto r = pls(g, PlsConfig{});
  EXPECT_TRUE(is_clique(g, r.clique));
  EXPECT_EQ(set_weight(g, r.clique), r.weight);
  EXPECT_LE(r.weight, 3808);
  EXPECT_GT(r.weight, 0);
}

TEST(Pls, RejectsBadConfig) {
  const auto g = gex_edges_only();
  for (int field = 0; field < 5; ++field) {
    PlsConfig cfg;
    int* slots[] = {&cfg.iterations, &cfg.random_phase_len, &cfg.penalty_phase_len, &cfg.degree_phase_len,
                    &cfg.penalty_decay_period};
    *slots[field] = 0;
    EXPECT_THROW(pls(g, cfg), std::invalid_argument) << "field " << field;
  }
}

TEST(PlsProperty, AlwaysACliqueAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = gen_random(10 + seed % 50, 0.1 + 0.015 * static_cast<double>(seed), 1, 10, seed);
    PlsConfig cfg;
    cfg.seed = seed;
    const auto a = pls(g, cfg);
    const auto b = pls(g, cfg);
    ASSERT_TRUE(is_clique(g, a.clique));
    ASSERT_EQ(set_weight(g, a.clique), a.weight);
    ASSERT_EQ(a.clique, b.clique);
    ASSERT_EQ(a.steps, b.steps);
    EXPECT_EQ(a.steps, 10U * 200U);
  }
}

TEST(PlsProperty, NeverBeatsTheExactOptimum) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = gen_random(25, 0.6, 1, 10, 1000 + seed);
    PlsConfig cfg;
    cfg.seed = seed;
    const auto lb = pls(g, cfg);
    const auto exact = solve(g, lb.clique);
    EXPECT_LE(lb.weight, exact.best_weight);
    EXPECT_EQ(exact.best_weight, solve(g, VertexSet(g.n())).best_weight);
  }
}
