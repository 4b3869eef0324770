#include "mewc/pls.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace mewc {
namespace {

enum class Phase { kRandom, kPenalty, kDegree };

class LocalSearch {
 public:
  LocalSearch(const WeightedGraph& g, const PlsConfig& cfg)
      : g_(g),
        cfg_(cfg),
        rng_(cfg.seed),
        in_clique_(g.n(), 0),
        missing_(g.n(), 0),
        gain_(g.n(), 0),
        penalty_(g.n(), 0),
        best_(g.n()) {}

  PlsResult run() {
    PlsResult result;
    if (g_.n() == 0) {
      result.clique = VertexSet(0);
      return result;
    }
    restart_at(pick_uniform_vertex());
    for (int it = 0; it < cfg_.iterations; ++it) {
      phase(Phase::kRandom, cfg_.random_phase_len);
      phase(Phase::kPenalty, cfg_.penalty_phase_len);
      phase(Phase::kDegree, cfg_.degree_phase_len);
    }
    result.clique = best_;
    result.weight = best_weight_;
    result.steps = steps_;
    result.restarts = restarts_;
    return result;
  }

 private:
  void phase(Phase ph, int len) {
    for (int s = 0; s < len; ++s) {
      step(ph);
      ++steps_;
    }
  }

  void step(Phase ph) {
    cands_.clear();
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (!in_clique_[v] && missing_[v] == 0) cands_.push_back(v);
    }
    if (!cands_.empty()) {
      add(select(ph));
      record();
      return;
    }
    // Only strictly improving swaps; a plateau triggers a restart instead.
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (!in_clique_[v] && missing_[v] == 1 && gain_[v] > gain_[sole_non_neighbor(v)]) cands_.push_back(v);
    }
    if (!cands_.empty()) {
      const Vertex in = select(ph);
      remove(sole_non_neighbor(in));
      add(in);
      record();
      return;
    }
    for (Vertex v : members_) ++penalty_[v];
    if (++restarts_ % static_cast<std::uint64_t>(cfg_.penalty_decay_period) == 0) {
      for (auto& p : penalty_) {
        if (p > 0) --p;
      }
    }
    restart_at(pick_uniform_vertex());
  }

  Vertex select(Phase ph) {
    switch (ph) {
      case Phase::kRandom:
        return cands_[uniform(cands_.size())];
      case Phase::kPenalty: {
        std::uint64_t lo = UINT64_MAX;
        for (Vertex v : cands_) lo = std::min(lo, penalty_[v]);
        ties_.clear();
        for (Vertex v : cands_) {
          if (penalty_[v] == lo) ties_.push_back(v);
        }
        return ties_[uniform(ties_.size())];
      }
      case Phase::kDegree: {
        Weight hi = -1;
        ties_.clear();
        for (Vertex v : cands_) {
          Weight deg = 0;
          for (Vertex u : cands_) deg += g_.edge_weight(u, v);
          if (deg > hi) {
            hi = deg;
            ties_.clear();
          }
          if (deg == hi) ties_.push_back(v);
        }
        return ties_[uniform(ties_.size())];
      }
    }
    return cands_.front();
  }

  Vertex sole_non_neighbor(Vertex v) const {
    for (Vertex u : members_) {
      if (!g_.adjacent(u, v)) return u;
    }
    throw std::logic_error("swap candidate has no non-neighbor in the clique");
  }

  void add(Vertex u) {
    in_clique_[u] = 1;
    members_.push_back(u);
    weight_ += gain_[u];
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (v == u) continue;
      if (!g_.adjacent(u, v)) ++missing_[v];
      gain_[v] += g_.edge_weight(u, v);
    }
  }

  void remove(Vertex u) {
    in_clique_[u] = 0;
    std::erase(members_, u);
    weight_ -= gain_[u];
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (v == u) continue;
      if (!g_.adjacent(u, v)) --missing_[v];
      gain_[v] -= g_.edge_weight(u, v);
    }
  }

  void restart_at(Vertex v) {
    while (!members_.empty()) remove(members_.back());
    add(v);
    record();
  }

  void record() {
    if (weight_ > best_weight_) {
      best_weight_ = weight_;
      best_ = VertexSet::from_range(g_.n(), members_);
    }
  }

  std::size_t uniform(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  Vertex pick_uniform_vertex() { return static_cast<Vertex>(uniform(g_.n())); }

  const WeightedGraph& g_;
  const PlsConfig& cfg_;
  std::mt19937_64 rng_;

  std::vector<char> in_clique_;
  std::vector<Vertex> members_;
  std::vector<std::uint32_t> missing_;
  std::vector<Weight> gain_;
  std::vector<std::uint64_t> penalty_;
  Weight weight_ = 0;

  std::vector<Vertex> cands_;
  std::vector<Vertex> ties_;

  VertexSet best_;
  Weight best_weight_ = 0;
  std::uint64_t steps_ = 0;
  std::uint64_t restarts_ = 0;
};

}  // namespace

PlsResult pls(const WeightedGraph& g, const PlsConfig& cfg) {
  if (cfg.iterations <= 0 || cfg.random_phase_len <= 0 || cfg.penalty_phase_len <= 0 || cfg.degree_phase_len <= 0 ||
      cfg.penalty_decay_period <= 0) {
    throw std::invalid_argument("PLS counts must be positive");
  }
  return LocalSearch(g, cfg).run();
}

}  // namespace mewc
