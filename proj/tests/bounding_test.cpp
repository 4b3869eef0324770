#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mewc/bounding.hpp"
#include "mewc/oracle.hpp"
#include "test_support.hpp"

using namespace mewc;
using namespace mewc::testing;

namespace {

const std::vector<std::vector<Vertex>> kFigureColoring{{0, 2, 5}, {1, 3}, {4}};

struct Subproblem {
  WeightedGraph g;
  VertexSet s;
  std::vector<Weight> w_rho;
};

Subproblem random_subproblem(std::mt19937_64& rng, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> size(1, max_n);
  std::uniform_real_distribution<double> dens(0.1, 0.95);
  std::uniform_int_distribution<Weight> rho(0, 30);
  Subproblem sp{random_graph(rng, size(rng), dens(rng), 20), {}, {}};
  sp.s = random_subset(rng, sp.g.n(), 0.8);
  sp.w_rho.resize(sp.g.n());
  for (auto& w : sp.w_rho) w = rho(rng);
  return sp;
}

// Best w_rho-augmented clique containing `must` inside `pool` ∪ {must}.
Weight best_with(const Subproblem& sp, Vertex must, const std::vector<Vertex>& pool) {
  std::vector<Vertex> keep;
  std::vector<Weight> shifted = sp.w_rho;
  for (Vertex v : pool) {
    if (v != must && sp.g.adjacent(must, v)) {
      keep.push_back(v);
      shifted[v] += sp.g.edge_weight(must, v);
    }
  }
  return sp.w_rho[must] + brute_force_vertex_edge_mewc(induced(sp.g, keep, shifted));
}

}  // namespace

TEST(WRho, Examples) {
  const auto g = gex_edges_only();
  EXPECT_EQ(w_rho(g, VertexSet(6, {4, 5}), 3), 11);
  EXPECT_EQ(w_rho(g, VertexSet(6), 2), 0);
  EXPECT_EQ(w_rho(g, VertexSet(6, {3}), 2), 6);
  EXPECT_THROW(w_rho(g, VertexSet(6, {3}), 3), std::invalid_argument);
}

TEST(VertexWeightedBound, FigureColoring) {
  const auto res = vertex_weighted_upper_bound(gex_full(), kFigureColoring);
  EXPECT_EQ(res.sigma, (std::vector<Weight>{2, 8, 3, 12, 21, 3}));
  EXPECT_EQ(res.bound, 36);
}

TEST(VertexWeightedBound, EdgelessSingletons) {
  const WeightedGraph g(4, {}, {3, 9, 1, 4});
  const auto res = vertex_weighted_upper_bound(g, {{0}, {1}, {2}, {3}});
  EXPECT_EQ(res.bound, 3 + 9 + 1 + 4);
  EXPECT_EQ(res.sigma, (std::vector<Weight>{3, 9, 1, 4}));
}

TEST(VertexWeightedBound, RejectsBadColorings) {
  const auto g = gex_full();
  EXPECT_THROW(vertex_weighted_upper_bound(g, {{0, 1}, {2, 3, 4, 5}}), std::invalid_argument);
  EXPECT_THROW(vertex_weighted_upper_bound(g, {{0, 2, 5}, {1, 3}}), std::invalid_argument);
  EXPECT_THROW(vertex_weighted_upper_bound(g, {{0, 2, 5}, {1, 3}, {4, 0}}), std::invalid_argument);
  EXPECT_THROW(vertex_weighted_upper_bound(g, {{0, 2, 5}, {1, 3}, {4, 6}}), std::invalid_argument);
}

TEST(VertexWeightedBound, DominatesOracleOnRandomGraphs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_graph(rng, 6 + trial % 9, 0.6, 15, 12);
    // Any greedy partition into independent sets will do.
    std::vector<std::vector<Vertex>> coloring;
    std::vector<Vertex> order(g.n());
    for (Vertex v = 0; v < g.n(); ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    for (Vertex v : order) {
      auto it = std::find_if(coloring.begin(), coloring.end(), [&](const auto& k) {
        return std::none_of(k.begin(), k.end(), [&](Vertex u) { return g.adjacent(u, v); });
      });
      if (it == coloring.end()) {
        coloring.push_back({v});
      } else {
        it->push_back(v);
      }
    }
    EXPECT_GE(vertex_weighted_upper_bound(g, coloring).bound, brute_force_vertex_edge_mewc(g));
  }
}

TEST(CalcSeqAndUb, Empty) {
  BoundWorkspace ws(5);
  const std::vector<Weight> w(5, 0);
  const auto seq = ws.calc_seq_and_ub(complete_graph(5, 1), VertexSet(5), w);
  EXPECT_TRUE(seq.empty());
  EXPECT_EQ(seq.num_colors, 0U);
}

TEST(CalcSeqAndUb, SingleVertex) {
  BoundWorkspace ws;
  const std::vector<Weight> w{7};
  const auto seq = ws.calc_seq_and_ub(WeightedGraph(1, {}), VertexSet(1, {0}), w);
  EXPECT_EQ(seq.order, (std::vector<Vertex>{0}));
  EXPECT_EQ(seq.upper, (std::vector<Weight>{7}));
}

// Hand trace on the worked example with its vertex weights as w_rho:
// class 1 picks v1 (2), v3 (3, ties v6 and wins on index), v6 (3);
// sigma then becomes v2 6+2, v4 5+7, v5 8+8; class 2 picks v2 (8), v4 (12);
// v5 gains max(5, 4) = 5 and forms class 3 alone.
TEST(CalcSeqAndUb, WorkedExampleTrace) {
  const auto g = gex_edges_only();
  const auto w = gex_vertex_weights();
  BoundWorkspace ws;
  const auto seq = ws.calc_seq_and_ub(g, VertexSet::full(6), w);

  EXPECT_EQ(seq.classes(), (std::vector<std::vector<Vertex>>{{0, 2, 5}, {1, 3}, {4}}));
  EXPECT_EQ(seq.order, (std::vector<Vertex>{4, 3, 1, 5, 2, 0}));
  EXPECT_EQ(seq.sigma, (std::vector<Weight>{21, 12, 8, 3, 3, 2}));
  EXPECT_EQ(seq.upper, (std::vector<Weight>{36, 15, 11, 3, 3, 2}));
}

TEST(CalcSeqAndUb, StructuralInvariants) {
  std::mt19937_64 rng(99);
  BoundWorkspace ws;
  for (int trial = 0; trial < 2000; ++trial) {
    const auto sp = random_subproblem(rng, 30);
    const auto seq = ws.calc_seq_and_ub(sp.g, sp.s, sp.w_rho);

    auto sorted = seq.order;
    std::sort(sorted.begin(), sorted.end());
    ASSERT_EQ(sorted, sp.s.to_vector());
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i > 0) {
        ASSERT_LE(seq.upper[i], seq.upper[i - 1]);
      }
      ASSERT_GE(seq.upper[i], seq.sigma[i]);
      ASSERT_GE(seq.sigma[i], sp.w_rho[seq.order[i]]);
    }
    for (const auto& klass : seq.classes()) {
      for (Vertex a : klass) {
        for (Vertex b : klass) ASSERT_FALSE(sp.g.adjacent(a, b));
      }
    }
  }
}

TEST(CalcSeqAndUb, SigmaAccounting) {
  std::mt19937_64 rng(123);
  BoundWorkspace ws;
  for (int trial = 0; trial < 500; ++trial) {
    const auto sp = random_subproblem(rng, 25);
    const auto seq = ws.calc_seq_and_ub(sp.g, sp.s, sp.w_rho);
    const auto classes = seq.classes();
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const Vertex v = seq.order[i];
      Weight expect = sp.w_rho[v];
      for (std::uint32_t k = 1; k < seq.color[i]; ++k) {
        Weight m = 0;
        for (Vertex u : classes[k - 1]) {
          if (sp.g.adjacent(u, v)) m = std::max(m, sp.g.edge_weight(u, v));
        }
        expect += m;
      }
      ASSERT_EQ(seq.sigma[i], expect);
    }
  }
}

TEST(CalcSeqAndUb, BoundAndPrefixSoundness) {
  std::mt19937_64 rng(2024);
  BoundWorkspace ws;
  for (int trial = 0; trial < 500; ++trial) {
    const auto sp = random_subproblem(rng, 16);
    const auto seq = ws.calc_seq_and_ub(sp.g, sp.s, sp.w_rho);
    if (seq.empty()) continue;

    const auto members = sp.s.to_vector();
    EXPECT_GE(seq.upper[0], brute_force_vertex_edge_mewc(induced(sp.g, members, sp.w_rho)));

    for (std::size_t i = 0; i < seq.size(); ++i) {
      const std::vector<Vertex> later(seq.order.begin() + static_cast<std::ptrdiff_t>(i) + 1, seq.order.end());
      ASSERT_GE(seq.upper[i], best_with(sp, seq.order[i], later)) << "trial " << trial << " position " << i;
    }
  }
}

TEST(CalcSeqAndUb, WorkspaceReuseAcrossGraphSizes) {
  BoundWorkspace ws(3);
  const auto g = gex_edges_only();
  const auto w = gex_vertex_weights();
  const auto a = ws.calc_seq_and_ub(g, VertexSet::full(6), w);
  const auto b = ws.calc_seq_and_ub(complete_graph(3, 2), VertexSet::full(3), std::vector<Weight>{0, 0, 0});
  const auto c = ws.calc_seq_and_ub(g, VertexSet::full(6), w);
  EXPECT_EQ(a.order, c.order);
  EXPECT_EQ(a.upper, c.upper);
  EXPECT_EQ(b.num_colors, 3U);
  EXPECT_EQ(b.upper, (std::vector<Weight>{6, 2, 0}));
}
