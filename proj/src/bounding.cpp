#include "mewc/bounding.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mewc {

std::vector<std::vector<Vertex>> SeqAndBounds::classes() const {
  std::vector<std::vector<Vertex>> out(num_colors);
  for (std::size_t i = order.size(); i-- > 0;) out[color[i] - 1].push_back(order[i]);
  return out;
}

Weight w_rho(const WeightedGraph& g, const VertexSet& c, Vertex v) {
  if (c.contains(v)) throw std::invalid_argument("w_rho: vertex " + std::to_string(v) + " already in the clique");
  Weight total = 0;
  for (Vertex u : c) total += g.edge_weight(u, v);
  return total;
}

ColoringBound vertex_weighted_upper_bound(const WeightedGraph& g, const std::vector<std::vector<Vertex>>& coloring) {
  const std::size_t n = g.n();
  std::vector<std::uint32_t> tau(n, 0);
  std::size_t covered = 0;
  for (std::size_t i = 0; i < coloring.size(); ++i) {
    for (Vertex v : coloring[i]) {
      if (v >= n) throw std::invalid_argument("coloring names vertex " + std::to_string(v) + " outside the graph");
      if (tau[v] != 0) throw std::invalid_argument("vertex " + std::to_string(v) + " appears in two color classes");
      tau[v] = static_cast<std::uint32_t>(i + 1);
      ++covered;
    }
    for (std::size_t a = 0; a < coloring[i].size(); ++a) {
      for (std::size_t b = a + 1; b < coloring[i].size(); ++b) {
        if (g.adjacent(coloring[i][a], coloring[i][b])) {
          throw std::invalid_argument("color class " + std::to_string(i + 1) + " is not independent");
        }
      }
    }
  }
  if (covered != n) throw std::invalid_argument("coloring does not cover every vertex");

  ColoringBound result;
  result.sigma.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    Weight s = g.vertex_weight(v);
    for (std::size_t i = 0; i + 1 < tau[v]; ++i) {
      Weight heaviest = 0;
      for (Vertex u : coloring[i]) {
        if (g.adjacent(u, v)) heaviest = std::max(heaviest, g.edge_weight(u, v));
      }
      s += heaviest;
    }
    result.sigma[v] = s;
  }
  for (const auto& klass : coloring) {
    Weight m = 0;
    for (Vertex v : klass) m = std::max(m, result.sigma[v]);
    result.bound += m;
  }
  return result;
}

BoundWorkspace::BoundWorkspace(std::size_t n) { reserve(n); }

void BoundWorkspace::reserve(std::size_t n) {
  if (sigma_.size() == n) return;
  uncolored_ = VertexSet(n);
  candidates_ = VertexSet(n);
  sigma_.assign(n, 0);
  klass_.reserve(n);
}

void BoundWorkspace::calc_seq_and_ub(const WeightedGraph& g, const VertexSet& s,
                                     std::span<const Weight> vertex_weight, SeqAndBounds& out) {
  reserve(g.n());
  uncolored_ = s;
  std::size_t size = 0;
  for (Vertex v : s) {
    sigma_[v] = vertex_weight[v];
    ++size;
  }
  out.order.resize(size);
  out.upper.resize(size);
  out.sigma.resize(size);
  out.color.resize(size);

  // Colored vertices go to the head of the order, so fill from the back.
  std::size_t pos = size;
  Weight closed_maxima = 0;
  std::uint32_t k = 0;
  while (pos > 0) {
    ++k;
    klass_.clear();
    candidates_ = uncolored_;
    Weight class_max = 0;
    while (!candidates_.empty()) {
      Vertex pick = candidates_.first();
      for (Vertex v : candidates_) {
        if (sigma_[v] < sigma_[pick]) pick = v;
      }
      --pos;
      out.order[pos] = pick;
      out.upper[pos] = sigma_[pick] + closed_maxima;
      out.sigma[pos] = sigma_[pick];
      out.color[pos] = k;
      class_max = std::max(class_max, sigma_[pick]);
      klass_.push_back(pick);
      candidates_ -= g.neighbors(pick);
      candidates_.erase(pick);
      uncolored_.erase(pick);
    }
    closed_maxima += class_max;

    // Non-edges weigh 0, so the max over all of I_k equals the max over
    // I_k ∩ N(v), with the empty max contributing 0.
    for (Vertex v : uncolored_) {
      Weight heaviest = 0;
      for (Vertex u : klass_) heaviest = std::max(heaviest, g.edge_weight(u, v));
      sigma_[v] += heaviest;
    }
  }
  out.num_colors = k;
}

}  // namespace mewc
