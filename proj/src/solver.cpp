#include "mewc/solver.hpp"

#include <algorithm>
#include <string>

namespace mewc {
namespace {

void check_seq(const SeqAndBounds& seq, const WeightedGraph& g, const VertexSet& s,
               std::span<const Weight> w_rho) {
  VertexSet seen(g.n());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Vertex v = seq.order[i];
    if (!s.contains(v) || seen.contains(v)) throw InvariantViolation("branch order is not a permutation of S");
    seen.insert(v);
    if (i > 0 && seq.upper[i] > seq.upper[i - 1]) throw InvariantViolation("upper bounds increase along the order");
    if (seq.upper[i] < seq.sigma[i] || seq.sigma[i] < w_rho[v] || w_rho[v] < 0) {
      throw InvariantViolation("expected upper >= sigma >= w_rho >= 0");
    }
  }
  if (seen != s) throw InvariantViolation("branch order misses candidates");
  for (const auto& klass : seq.classes()) {
    for (std::size_t a = 0; a < klass.size(); ++a) {
      for (std::size_t b = a + 1; b < klass.size(); ++b) {
        if (g.adjacent(klass[a], klass[b])) throw InvariantViolation("color class is not independent");
      }
    }
  }
}

}  // namespace

MecqSolver::MecqSolver(const WeightedGraph& g, SolverConfig cfg)
    : graph_(g), cfg_(std::move(cfg)), workspace_(g.n()), levels_(g.n() + 1) {
  if (g.has_vertex_weights()) throw std::invalid_argument("solver expects a graph without vertex weights");
}

MecqSolver::Level& MecqSolver::level(std::size_t depth) {
  Level& lv = levels_[depth];
  if (lv.w_rho.size() != graph_.n()) {
    lv.candidates = VertexSet(graph_.n());
    lv.remaining = VertexSet(graph_.n());
    lv.w_rho.assign(graph_.n(), 0);
  }
  return lv;
}

SolveResult MecqSolver::solve(const VertexSet& initial) {
  const auto start = std::chrono::steady_clock::now();
  for (Vertex v : initial) {
    if (v >= graph_.n()) throw std::invalid_argument("initial solution names vertex outside the graph");
  }
  VertexSet init(graph_.n());
  for (Vertex v : initial) init.insert(v);
  if (!is_clique(graph_, init)) throw std::invalid_argument("initial solution is not a clique");

  clique_.clear();
  best_.clear();
  best_weight_ = 0;
  iterations_ = 0;
  aborted_ = false;
  max_observed_ = 0;
  if (cfg_.use_initial_solution) {
    best_ = init.to_vector();
    best_weight_ = set_weight(graph_, init);
  }
  const Weight initial_weight = best_weight_;
  if (cfg_.time_limit) {
    deadline_ = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(*cfg_.time_limit));
  }

  Level& root = level(0);
  root.candidates = VertexSet::full(graph_.n());
  std::fill(root.w_rho.begin(), root.w_rho.end(), Weight{0});
  expand(0, 0);

  if (cfg_.assertion_level == AssertionLevel::kInvariants && !aborted_ && best_weight_ < max_observed_) {
    throw InvariantViolation("incumbent ended below an observed partial clique weight");
  }

  SolveResult result;
  result.best_clique = VertexSet::from_range(graph_.n(), best_);
  result.best_weight = best_weight_;
  result.proven_optimal = !aborted_;
  result.iterations = iterations_;
  result.initial_weight = initial_weight;
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

bool MecqSolver::limit_reached() {
  if (cfg_.node_limit && iterations_ >= *cfg_.node_limit) return true;
  if (cfg_.time_limit && std::chrono::steady_clock::now() >= deadline_) return true;
  return false;
}

void MecqSolver::check_node(const Level& lv, Weight clique_weight) const {
  const VertexSet c = VertexSet::from_range(graph_.n(), clique_);
  if (set_weight(graph_, c) != clique_weight) throw InvariantViolation("incremental clique weight drifted");
  for (Vertex v : lv.candidates) {
    if (!c.is_subset_of(graph_.neighbors(v))) throw InvariantViolation("candidate not adjacent to the whole clique");
    if (lv.w_rho[v] != w_rho(graph_, c, v)) throw InvariantViolation("cached w_rho differs from recomputation");
  }
}

void MecqSolver::expand(std::size_t depth, Weight clique_weight) {
  if (limit_reached()) {
    aborted_ = true;
    return;
  }
  ++iterations_;
  Level& lv = levels_[depth];
  if (cfg_.on_expand) cfg_.on_expand(clique_, lv.candidates);
  const bool checking = cfg_.assertion_level == AssertionLevel::kInvariants;
  if (checking) {
    check_node(lv, clique_weight);
    max_observed_ = std::max(max_observed_, clique_weight);
  }

  if (lv.candidates.empty()) {
    if (clique_weight > best_weight_) {
      best_ = clique_;
      best_weight_ = clique_weight;
      if (cfg_.on_incumbent) cfg_.on_incumbent(best_, best_weight_);
    }
    return;
  }

  workspace_.calc_seq_and_ub(graph_, lv.candidates, lv.w_rho, lv.seq);
  if (checking) check_seq(lv.seq, graph_, lv.candidates, lv.w_rho);

  lv.remaining = lv.candidates;
  for (std::size_t i = 0; i < lv.seq.size(); ++i) {
    const Vertex p = lv.seq.order[i];
    // upper[] is non-increasing and the incumbent only grows, so the first
    // pruned branch ends the loop.
    if (!cfg_.disable_bounds && clique_weight + lv.seq.upper[i] <= best_weight_) break;

    Level& child = level(depth + 1);
    child.candidates.assign_intersection(lv.remaining, graph_.neighbors(p));
    for (Vertex v : child.candidates) child.w_rho[v] = lv.w_rho[v] + graph_.edge_weight(p, v);

    clique_.push_back(p);
    expand(depth + 1, clique_weight + lv.w_rho[p]);
    clique_.pop_back();
    if (aborted_) return;
    lv.remaining.erase(p);
  }
}

SolveResult solve(const WeightedGraph& g, const VertexSet& initial, const SolverConfig& cfg) {
  MecqSolver solver(g, cfg);
  return solver.solve(initial);
}

}  // namespace mewc
