#include "mewc/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace mewc {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename Int>
Int parse_int(std::string_view tok, std::size_t line, const char* what) {
  Int value{};
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(tok) + "'");
  }
  return value;
}

struct RawInstance {
  InstanceHeader header;
  std::vector<Edge> edges;
  std::size_t edge_lines = 0;
};

// Shared reader for both formats; `weighted` selects `p wedge` + `e i j w`.
RawInstance read_instance(std::string_view text, bool weighted) {
  RawInstance raw;
  raw.header.format = weighted ? InstanceFormat::kWeighted : InstanceFormat::kDimacs;
  bool have_header = false;
  std::size_t header_line = 0;
  std::size_t lineno = 0;
  std::set<std::pair<Vertex, Vertex>> seen;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;

    const auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;

    if (tok[0] == "p") {
      if (have_header) throw ParseError(lineno, "duplicate 'p' line");
      const bool tag_ok = weighted ? tok.size() >= 2 && tok[1] == "wedge"
                                   : tok.size() >= 2 && (tok[1] == "edge" || tok[1] == "col");
      if (tok.size() != 4 || !tag_ok) {
        throw ParseError(lineno, weighted ? "expected 'p wedge <n> <m>'" : "expected 'p edge <n> <m>'");
      }
      raw.header.vertices = parse_int<std::size_t>(tok[2], lineno, "vertex count");
      raw.header.edges = parse_int<std::size_t>(tok[3], lineno, "edge count");
      have_header = true;
      header_line = lineno;
      continue;
    }

    if (tok[0] == "e") {
      if (!have_header) throw ParseError(lineno, "edge line before 'p' line");
      const std::size_t expected = weighted ? 4 : 3;
      if (tok.size() != expected) {
        throw ParseError(lineno, weighted ? "expected 'e <i> <j> <w>'" : "expected 'e <i> <j>'");
      }
      const auto i = parse_int<long long>(tok[1], lineno, "vertex index");
      const auto j = parse_int<long long>(tok[2], lineno, "vertex index");
      const auto n = static_cast<long long>(raw.header.vertices);
      if (i < 1 || i > n || j < 1 || j > n) {
        throw ParseError(lineno, "vertex index out of range 1.." + std::to_string(n));
      }
      if (i == j) throw ParseError(lineno, "self-loop on vertex " + std::to_string(i));
      Weight w = 1;
      if (weighted) {
        w = parse_int<Weight>(tok[3], lineno, "weight");
        if (w < 0) throw ParseError(lineno, "negative edge weight");
      }
      const auto u = static_cast<Vertex>(i - 1);
      const auto v = static_cast<Vertex>(j - 1);
      const auto key = std::minmax(u, v);
      ++raw.edge_lines;
      if (!seen.insert(key).second) {
        if (weighted) {
          for (const Edge& e : raw.edges) {
            if (std::minmax(e.u, e.v) == key && e.w != w) {
              throw ParseError(lineno, "edge listed again with a different weight");
            }
          }
        }
        continue;
      }
      raw.edges.push_back({key.first, key.second, w});
      continue;
    }

    throw ParseError(lineno, "unrecognized line '" + std::string(tok[0]) + "'");
  }

  if (!have_header) throw ParseError(lineno, "missing 'p' line");
  // Declared m may count raw edge lines or unique pairs; both appear in the wild.
  if (raw.header.edges != raw.edges.size() && raw.header.edges != raw.edge_lines) {
    throw ParseError(header_line, "declared " + std::to_string(raw.header.edges) + " edges, found " +
                                      std::to_string(raw.edges.size()));
  }
  raw.header.edges = raw.edges.size();
  return raw;
}

}  // namespace

WeightedGraph parse_dimacs(std::string_view text) {
  const auto raw = read_instance(text, false);
  return WeightedGraph(raw.header.vertices, raw.edges);
}

WeightedGraph apply_dimacs_weights(const WeightedGraph& g) {
  auto edges = g.edges();
  for (Edge& e : edges) {
    const Weight i = static_cast<Weight>(e.u) + 1;
    const Weight j = static_cast<Weight>(e.v) + 1;
    e.w = (i + j) % 200 + 1;
  }
  return WeightedGraph(g.n(), edges);
}

WeightedGraph parse_weighted_edge_list(std::string_view text) {
  const auto raw = read_instance(text, true);
  return WeightedGraph(raw.header.vertices, raw.edges);
}

std::string write_weighted_edge_list(const WeightedGraph& g) {
  std::string out = "p wedge " + std::to_string(g.n()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "e ";
    out += std::to_string(e.u + 1);
    out += ' ';
    out += std::to_string(e.v + 1);
    out += ' ';
    out += std::to_string(e.w);
    out += '\n';
  }
  return out;
}

WeightedGraph gen_random(std::size_t n, double density, Weight w_min, Weight w_max, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in [0, 1]");
  if (w_min < 1 || w_min > w_max) throw std::invalid_argument("weight range must satisfy 1 <= wmin <= wmax");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Weight> weight(w_min, w_max);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      // 53-bit uniform in [0, 1): density 1 always succeeds, density 0 never does.
      const double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (r < density) edges.push_back({u, v, weight(rng)});
    }
  }
  return WeightedGraph(n, edges);
}

InstanceFormat format_for_path(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  return ext == ".clq" || ext == ".col" ? InstanceFormat::kDimacs : InstanceFormat::kWeighted;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace mewc
