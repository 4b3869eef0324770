#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mewc/vertex_set.hpp"

namespace mewc {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph with nonnegative integer edge weights and optional
// vertex weights. Immutable after construction.
//
// Edge weights live in a flat lower-triangular table, so w(u,v) is O(1) and
// w(u,v) == 0 for every non-adjacent pair.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  // Throws std::invalid_argument on self-loops, out-of-range endpoints,
  // negative weights, or a pair listed twice with different weights.
  // Repeated pairs with equal weight collapse into one edge.
  WeightedGraph(std::size_t n, std::span<const Edge> edges,
                std::vector<Weight> vertex_weights = {});

  std::size_t n() const { return n_; }
  std::size_t edge_count() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  Weight edge_weight(Vertex u, Vertex v) const {
    if (u == v) return 0;
    return u < v ? weights_[tri(u, v)] : weights_[tri(v, u)];
  }
  Weight vertex_weight(Vertex v) const { return vertex_weights_[v]; }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  std::span<const Weight> vertex_weights() const { return vertex_weights_; }
  bool has_vertex_weights() const;

  // Edges with u < v, ascending by (u, v).
  std::vector<Edge> edges() const;

  WeightedGraph with_vertex_weights(std::vector<Weight> vertex_weights) const;
  WeightedGraph without_vertex_weights() const { return with_vertex_weights({}); }

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  static std::size_t tri(std::size_t lo, std::size_t hi) { return hi * (hi - 1) / 2 + lo; }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<Weight> weights_;
  std::vector<Weight> vertex_weights_;
};

// Empty and singleton sets are cliques.
bool is_clique(const WeightedGraph& g, const VertexSet& c);

// W(S): vertex weights of s plus edge weights of the subgraph induced by s.
Weight set_weight(const WeightedGraph& g, const VertexSet& s);

// 2m / (n(n-1)); 0 for graphs with fewer than two vertices.
double density(const WeightedGraph& g);

}  // namespace mewc
