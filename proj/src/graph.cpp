#include "mewc/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mewc {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) {
    if (v >= universe) throw std::out_of_range("vertex " + std::to_string(v) + " outside universe");
    insert(v);
  }
}

VertexSet VertexSet::from_range(std::size_t universe, const std::vector<Vertex>& members) {
  VertexSet s(universe);
  for (Vertex v : members) {
    if (v >= universe) throw std::out_of_range("vertex " + std::to_string(v) + " outside universe");
    s.insert(v);
  }
  return s;
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  if (const std::size_t tail = universe % kWordBits; tail != 0) {
    s.words_.back() = (Word{1} << tail) - 1;
  }
  return s;
}

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

Vertex VertexSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return static_cast<Vertex>(i * kWordBits + std::countr_zero(words_[i]));
  }
  return static_cast<Vertex>(universe_);
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  if (o.universe_ > universe_) {
    universe_ = o.universe_;
    words_.resize(o.words_.size(), 0);
  }
  for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  const std::size_t k = std::min(words_.size(), o.words_.size());
  for (std::size_t i = 0; i < k; ++i) words_[i] &= ~o.words_[i];
  return *this;
}

void VertexSet::assign_intersection(const VertexSet& a, const VertexSet& b) {
  universe_ = a.universe_;
  words_.resize(a.words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] = a.words_[i] & (i < b.words_.size() ? b.words_[i] : 0);
  }
}

bool VertexSet::intersects(const VertexSet& o) const {
  const std::size_t k = std::min(words_.size(), o.words_.size());
  for (std::size_t i = 0; i < k; ++i) {
    if ((words_[i] & o.words_[i]) != 0) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word other = i < o.words_.size() ? o.words_[i] : 0;
    if ((words_[i] & ~other) != 0) return false;
  }
  return true;
}

WeightedGraph::WeightedGraph(std::size_t n, std::span<const Edge> edges, std::vector<Weight> vertex_weights)
    : n_(n), adj_(n, VertexSet(n)), weights_(n < 2 ? 0 : n * (n - 1) / 2, 0) {
  if (vertex_weights.empty()) {
    vertex_weights_.assign(n, 0);
  } else if (vertex_weights.size() != n) {
    throw std::invalid_argument("vertex weight count " + std::to_string(vertex_weights.size()) +
                                " does not match n=" + std::to_string(n));
  } else {
    vertex_weights_ = std::move(vertex_weights);
  }
  for (Weight w : vertex_weights_) {
    if (w < 0) throw std::invalid_argument("negative vertex weight");
  }

  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") out of range for n=" + std::to_string(n));
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
    if (e.w < 0) throw std::invalid_argument("negative edge weight");
    const auto [lo, hi] = std::minmax(e.u, e.v);
    Weight& slot = weights_[tri(lo, hi)];
    if (adj_[lo].contains(hi)) {
      if (slot != e.w) {
        throw std::invalid_argument("edge (" + std::to_string(lo) + "," + std::to_string(hi) +
                                    ") listed with conflicting weights");
      }
      continue;
    }
    adj_[lo].insert(hi);
    adj_[hi].insert(lo);
    slot = e.w;
    ++m_;
  }
}

bool WeightedGraph::has_vertex_weights() const {
  return std::any_of(vertex_weights_.begin(), vertex_weights_.end(), [](Weight w) { return w != 0; });
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (v > u) out.push_back({u, v, weights_[tri(u, v)]});
    }
  }
  return out;
}

WeightedGraph WeightedGraph::with_vertex_weights(std::vector<Weight> vertex_weights) const {
  const auto es = edges();
  return WeightedGraph(n_, es, std::move(vertex_weights));
}

bool is_clique(const WeightedGraph& g, const VertexSet& c) {
  for (Vertex v : c) {
    // Every other member must be a neighbor.
    VertexSet rest = c;
    rest.erase(v);
    if (!rest.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

Weight set_weight(const WeightedGraph& g, const VertexSet& s) {
  Weight total = 0;
  for (Vertex v : s) {
    total += g.vertex_weight(v);
    for (Vertex u : s) {
      if (u >= v) break;
      total += g.edge_weight(u, v);
    }
  }
  return total;
}

double density(const WeightedGraph& g) {
  const double n = static_cast<double>(g.n());
  if (g.n() < 2) return 0.0;
  return 2.0 * static_cast<double>(g.edge_count()) / (n * (n - 1.0));
}

}  // namespace mewc
