#pragma once

#include <cstddef>

#include "mewc/graph.hpp"

namespace mewc {

inline constexpr std::size_t kOracleDefaultLimit = 20;

struct OracleResult {
  VertexSet clique;
  Weight weight = 0;
};

// Exhaustive clique enumeration: every clique is grown by its higher-indexed
// common neighbors, with no bounds and no reordering. Returns the
// lexicographically smallest maximum-W clique (vertex weights included).
// Throws std::invalid_argument when g.n() > n_limit.
OracleResult brute_force_mewc(const WeightedGraph& g, std::size_t n_limit = kOracleDefaultLimit);

// Same search, weight only. Used to check the coloring bound on
// vertex-and-edge-weighted graphs.
Weight brute_force_vertex_edge_mewc(const WeightedGraph& g, std::size_t n_limit = kOracleDefaultLimit);

}  // namespace mewc
