#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mewc/graph.hpp"

namespace mewc {

enum class InstanceFormat { kDimacs, kWeighted };

struct InstanceHeader {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  InstanceFormat format = InstanceFormat::kDimacs;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// DIMACS clique format: `c` comments, one `p edge n m`, then `e i j` (1-based).
// Every edge gets weight 1. Duplicate edge lines collapse into one edge.
WeightedGraph parse_dimacs(std::string_view text);

// Weight edge (v_i, v_j) as ((i + j) mod 200) + 1 with 1-based i, j.
WeightedGraph apply_dimacs_weights(const WeightedGraph& g);

// `p wedge n m` followed by `e i j w` lines (1-based, w >= 0).
WeightedGraph parse_weighted_edge_list(std::string_view text);

// Byte-deterministic: header, then edges ascending by (i, j). Vertex
// weights are not representable and are dropped.
std::string write_weighted_edge_list(const WeightedGraph& g);

// G(n, p) with independent edges and weights uniform in [w_min, w_max].
// Generator: std::mt19937_64 seeded with `seed`.
WeightedGraph gen_random(std::size_t n, double density, Weight w_min, Weight w_max, std::uint64_t seed);

// Picks the format from the extension (.clq/.col → DIMACS, everything else
// weighted) unless one is given explicitly.
InstanceFormat format_for_path(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace mewc
