#include <omp.h>

#include <fstream>

#include "mewc/report.hpp"

namespace mewc {

std::vector<std::filesystem::path> read_manifest(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw std::runtime_error("cannot open manifest " + manifest.string());
  const auto base = manifest.parent_path();
  std::vector<std::filesystem::path> out;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    std::filesystem::path p = line.substr(b, e - b + 1);
    out.push_back(p.is_relative() ? base / p : p);
  }
  return out;
}

std::vector<SolveReport> run_bench(const std::vector<std::filesystem::path>& paths, const RunOptions& opt, int jobs) {
  std::vector<SolveReport> rows(paths.size());
  const auto count = static_cast<std::ptrdiff_t>(paths.size());

  // Each worker owns its solver; rows land in their manifest slot.
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs < 1 ? 1 : jobs)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto& path = paths[static_cast<std::size_t>(i)];
    SolveReport& row = rows[static_cast<std::size_t>(i)];
    try {
      row = solve_file(path, opt);
    } catch (const std::exception& e) {
      row = SolveReport{};
      row.instance = path.filename().string();
      row.error = e.what();
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<SolveReport>& rows) {
  std::string out = csv_header() + ",status\n";
  SolveReport total;
  total.instance = "TOTAL";
  std::size_t failed = 0;
  std::size_t proven = 0;
  for (const auto& r : rows) {
    std::string status = r.error.empty() ? "ok" : "error: " + r.error;
    if (status.find_first_of(",\"\n") != std::string::npos) {
      std::string q = "\"";
      for (char c : status) {
        if (c == '"') q += '"';
        q += c == '\n' ? ' ' : c;
      }
      status = q + "\"";
    }
    out += to_csv_row(r) + "," + status + "\n";
    if (!r.error.empty()) {
      ++failed;
      continue;
    }
    total.pls_time += r.pls_time;
    total.solve_time += r.solve_time;
    total.total_time += r.total_time;
    total.iterations += r.iterations;
    total.best_weight += r.best_weight;
    if (r.proven_optimal) ++proven;
  }
  // TOTAL: n = instance count, best_weight/iterations/times summed over
  // successful rows, proven_optimal = true iff every row was proven.
  total.n = rows.size();
  total.proven_optimal = failed == 0 && proven == rows.size();
  out += to_csv_row(total) + "," + std::to_string(rows.size() - failed) + " ok " + std::to_string(failed) +
         " failed\n";
  return out;
}

}  // namespace mewc
