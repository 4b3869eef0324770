#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace mewc {

using Vertex = std::uint32_t;
using Weight = std::int64_t;

// Dense bit-vector over the vertex universe [0, universe).
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const Word* words, std::size_t nwords, std::size_t word)
        : words_(words), nwords_(nwords), word_(word) {
      if (word_ < nwords_) {
        cur_ = words_[word_];
        seek();
      }
    }

    Vertex operator*() const {
      return static_cast<Vertex>(word_ * kWordBits + std::countr_zero(cur_));
    }
    const_iterator& operator++() {
      cur_ &= cur_ - 1;
      seek();
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& o) const { return word_ == o.word_ && cur_ == o.cur_; }

   private:
    void seek() {
      while (cur_ == 0) {
        if (++word_ >= nwords_) {
          word_ = nwords_;
          return;
        }
        cur_ = words_[word_];
      }
    }

    const Word* words_ = nullptr;
    std::size_t nwords_ = 0;
    std::size_t word_ = 0;
    Word cur_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

  // Throws std::out_of_range if any member is >= universe.
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  static VertexSet from_range(std::size_t universe, const std::vector<Vertex>& members);
  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }
  // Unchecked in release builds; callers guarantee v < universe().
  void insert(Vertex v) { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
  void erase(Vertex v) { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }
  void clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

  std::size_t count() const;
  bool empty() const;
  // Lowest member, or universe() when empty.
  Vertex first() const;

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  // this = a & b without allocating when capacities already match.
  void assign_intersection(const VertexSet& a, const VertexSet& b);
  bool intersects(const VertexSet& o) const;
  bool is_subset_of(const VertexSet& o) const;

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  const_iterator begin() const { return {words_.data(), words_.size(), 0}; }
  const_iterator end() const { return {words_.data(), words_.size(), words_.size()}; }

  std::span<const Word> words() const { return words_; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace mewc
