#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mewc/graph.hpp"
#include "mewc/instance_io.hpp"
#include "mewc/pls.hpp"

namespace mewc {

// Options shared by `solve` and `bench`.
struct RunOptions {
  std::optional<InstanceFormat> format;  // default: by extension
  bool dimacs_auto_weight = false;
  bool unit_weights = false;
  bool use_pls = true;
  PlsConfig pls;
  std::optional<double> time_limit;
  std::optional<std::uint64_t> node_limit;
};

// One solved instance. Times are wall-clock seconds; the clique is sorted
// and 1-based.
struct SolveReport {
  std::string instance;
  std::size_t n = 0;
  double density = 0.0;
  Weight lb = 0;
  double pls_time = 0.0;
  double solve_time = 0.0;
  double total_time = 0.0;
  Weight best_weight = 0;
  std::vector<std::size_t> clique;
  std::uint64_t iterations = 0;
  bool proven_optimal = false;
  std::string error;  // bench only: set when the instance failed
};

// Reads an instance and applies the weighting rule selected by `opt`.
// Throws std::invalid_argument on inconsistent flags and ParseError /
// std::runtime_error on unreadable input.
WeightedGraph load_instance(const std::filesystem::path& path, const RunOptions& opt);

// Optional PLS warm start followed by the exact search.
SolveReport solve_graph(const WeightedGraph& g, const std::string& name, const RunOptions& opt);
SolveReport solve_file(const std::filesystem::path& path, const RunOptions& opt);

double round_to(double x, int decimals);

nlohmann::ordered_json to_json(const SolveReport& r);
std::string to_text(const SolveReport& r);
std::string csv_header();
std::string to_csv_row(const SolveReport& r);

// Newline-separated paths; `#` starts a comment. Relative paths resolve
// against the manifest's directory.
std::vector<std::filesystem::path> read_manifest(const std::filesystem::path& manifest);

// Solves every instance, `jobs` at a time. Rows come back in input order and
// failures are captured in SolveReport::error.
std::vector<SolveReport> run_bench(const std::vector<std::filesystem::path>& paths, const RunOptions& opt, int jobs);

// Header, one row per report, and a trailing TOTAL row.
std::string bench_csv(const std::vector<SolveReport>& rows);

}  // namespace mewc
