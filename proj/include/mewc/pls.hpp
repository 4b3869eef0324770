#pragma once

#include <cstdint>

#include "mewc/graph.hpp"

namespace mewc {

struct PlsConfig {
  int iterations = 10;
  int random_phase_len = 50;
  int penalty_phase_len = 50;
  int degree_phase_len = 100;
  std::uint64_t seed = 0;
  // Positive penalties drop by one after this many restarts.
  int penalty_decay_period = 10;
};

struct PlsResult {
  VertexSet clique;
  Weight weight = 0;
  std::uint64_t steps = 0;
  std::uint64_t restarts = 0;
};

// Phased local search for a heavy clique. Each iteration runs a random, a
// penalty and a degree phase; a phase step is one add or swap move, or a
// restart when neither applies. Always returns a clique; deterministic for a
// fixed seed. Throws std::invalid_argument on non-positive phase lengths.
PlsResult pls(const WeightedGraph& g, const PlsConfig& cfg);

}  // namespace mewc
