#include "mewc/oracle.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mewc {
namespace {

struct Enumerator {
  const WeightedGraph& g;
  std::vector<Vertex> current;
  std::vector<Vertex> best;
  Weight best_weight = 0;

  // Preorder over cliques extended by higher indices visits them in
  // lexicographic order, so strict improvement keeps the smallest optimum.
  void grow(Vertex from, Weight weight) {
    if (weight > best_weight) {
      best_weight = weight;
      best = current;
    }
    for (Vertex v = from; v < g.n(); ++v) {
      Weight gained = g.vertex_weight(v);
      bool ok = true;
      for (Vertex u : current) {
        if (!g.adjacent(u, v)) {
          ok = false;
          break;
        }
        gained += g.edge_weight(u, v);
      }
      if (!ok) continue;
      current.push_back(v);
      grow(v + 1, weight + gained);
      current.pop_back();
    }
  }
};

OracleResult run(const WeightedGraph& g, std::size_t n_limit) {
  if (g.n() > n_limit) {
    throw std::invalid_argument("oracle refuses n=" + std::to_string(g.n()) + " (limit " + std::to_string(n_limit) +
                                ")");
  }
  Enumerator e{g, {}, {}, 0};
  e.grow(0, 0);
  return {VertexSet::from_range(g.n(), e.best), e.best_weight};
}

}  // namespace

OracleResult brute_force_mewc(const WeightedGraph& g, std::size_t n_limit) { return run(g, n_limit); }

Weight brute_force_vertex_edge_mewc(const WeightedGraph& g, std::size_t n_limit) { return run(g, n_limit).weight; }

}  // namespace mewc
