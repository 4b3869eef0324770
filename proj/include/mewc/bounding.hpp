#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mewc/graph.hpp"

namespace mewc {

// Branch order and per-branch bounds produced by one coloring pass.
//
// All arrays are parallel and indexed by position in the branch order:
// order[0] is p_1. Positions are filled in reverse order of color
// assignment, so upper[] is non-increasing along the order.
struct SeqAndBounds {
  std::vector<Vertex> order;
  std::vector<Weight> upper;
  std::vector<Weight> sigma;
  std::vector<std::uint32_t> color;  // 1-based color class of order[i]
  std::uint32_t num_colors = 0;

  std::size_t size() const { return order.size(); }
  bool empty() const { return order.empty(); }
  // Color classes I_1..I_k, members listed in the order they were colored.
  std::vector<std::vector<Vertex>> classes() const;
};

// Total edge weight between v and the members of c. Throws
// std::invalid_argument when v is itself a member of c.
Weight w_rho(const WeightedGraph& g, const VertexSet& c, Vertex v);

struct ColoringBound {
  std::vector<Weight> sigma;  // indexed by vertex
  Weight bound = 0;
};

// For a vertex-and-edge-weighted graph and a partition of its vertices into
// independent sets I_1..I_k, computes
//   sigma[v] = w(v) + sum_{i < tau(v)} max{ w(u,v) : u in I_i ∩ N(v) }
// (an empty max contributes 0) and the bound sum_i max{ sigma[v] : v in I_i },
// which dominates W(C) for every clique C. Throws std::invalid_argument if
// the classes do not partition the vertex set or one is not independent.
ColoringBound vertex_weighted_upper_bound(const WeightedGraph& g, const std::vector<std::vector<Vertex>>& coloring);

// Scratch space for calc_seq_and_ub. One instance per solver thread.
class BoundWorkspace {
 public:
  BoundWorkspace() = default;
  explicit BoundWorkspace(std::size_t n);

  // Greedy coloring of G(s) where each candidate v carries the pseudo vertex
  // weight vertex_weight[v]. Each class is a maximal independent set built by
  // repeatedly taking the candidate of minimum sigma (lowest index on ties);
  // after a class closes, every uncolored vertex adds its heaviest edge into
  // that class to its sigma. upper[v] = sigma[v] plus the sigma maxima of all
  // earlier classes, fixed at the moment v is colored.
  //
  // vertex_weight is indexed by vertex id and must cover every member of s.
  void calc_seq_and_ub(const WeightedGraph& g, const VertexSet& s, std::span<const Weight> vertex_weight,
                       SeqAndBounds& out);

  SeqAndBounds calc_seq_and_ub(const WeightedGraph& g, const VertexSet& s, std::span<const Weight> vertex_weight) {
    SeqAndBounds out;
    calc_seq_and_ub(g, s, vertex_weight, out);
    return out;
  }

 private:
  void reserve(std::size_t n);

  VertexSet uncolored_;
  VertexSet candidates_;
  std::vector<Weight> sigma_;
  std::vector<Vertex> klass_;
};

}  // namespace mewc
