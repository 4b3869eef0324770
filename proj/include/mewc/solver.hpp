#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mewc/bounding.hpp"
#include "mewc/graph.hpp"

namespace mewc {

enum class AssertionLevel { kOff, kInvariants };

struct SolverConfig {
  std::optional<double> time_limit;         // seconds
  std::optional<std::uint64_t> node_limit;  // EXPAND invocations
  bool use_initial_solution = true;
  AssertionLevel assertion_level = AssertionLevel::kOff;
  // Replace every bound with +inf: plain enumeration in branch order.
  bool disable_bounds = false;

  // Called at every EXPAND entry with the current clique and candidate set.
  std::function<void(std::span<const Vertex>, const VertexSet&)> on_expand;
  // Called whenever the incumbent improves.
  std::function<void(std::span<const Vertex>, Weight)> on_incumbent;
};

struct SolveResult {
  VertexSet best_clique;
  Weight best_weight = 0;
  bool proven_optimal = false;
  std::uint64_t iterations = 0;
  std::chrono::duration<double> elapsed{0};
  Weight initial_weight = 0;
};

// Raised when assertion_level is kInvariants and an internal invariant breaks.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exact maximum edge-weight clique by coloring-bounded branch and bound.
//
// A solver object owns its scratch buffers and is single-threaded; several
// solvers may share one graph concurrently.
class MecqSolver {
 public:
  // Throws std::invalid_argument if g carries nonzero vertex weights.
  explicit MecqSolver(const WeightedGraph& g, SolverConfig cfg = {});

  // Throws std::invalid_argument if `initial` is not a clique of g.
  SolveResult solve(const VertexSet& initial);
  SolveResult solve() { return solve(VertexSet(graph_.n())); }

 private:
  struct Level {
    VertexSet candidates;
    VertexSet remaining;
    std::vector<Weight> w_rho;
    SeqAndBounds seq;
  };

  void expand(std::size_t depth, Weight clique_weight);
  bool limit_reached();
  Level& level(std::size_t depth);
  void check_node(const Level& lv, Weight clique_weight) const;

  const WeightedGraph& graph_;
  SolverConfig cfg_;
  BoundWorkspace workspace_;
  std::vector<Level> levels_;

  std::vector<Vertex> clique_;
  std::vector<Vertex> best_;
  Weight best_weight_ = 0;
  Weight max_observed_ = 0;
  std::uint64_t iterations_ = 0;
  bool aborted_ = false;
  std::chrono::steady_clock::time_point deadline_;
};

SolveResult solve(const WeightedGraph& g, const VertexSet& initial, const SolverConfig& cfg = {});

}  // namespace mewc
