// mewc: solve, generate and cross-check maximum edge-weight clique instances.
//
// Exit status: 0 success (solve: proven optimum), 2 solve stopped by a limit,
// 3 oracle --check mismatch, 1 any error.

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mewc/instance_io.hpp"
#include "mewc/oracle.hpp"
#include "mewc/report.hpp"
#include "mewc/solver.hpp"

namespace {

enum class Output { kText, kJson, kCsv };

struct SharedFlags {
  std::string format;
  bool auto_weight = false;
  bool unit_weights = false;
  bool no_pls = false;
  std::optional<int> pls_iters;
  std::uint64_t seed = 0;
  std::optional<double> time_limit;
  std::optional<std::uint64_t> node_limit;
};

void add_instance_flags(CLI::App* cmd, SharedFlags& f) {
  cmd->add_option("--format", f.format, "Instance format (default: .clq/.col -> dimacs, else wedge)")
      ->check(CLI::IsMember({"dimacs", "wedge"}));
  cmd->add_flag("--dimacs-auto-weight", f.auto_weight, "Weight DIMACS edges as ((i+j) mod 200)+1");
  cmd->add_flag("--unit-weights", f.unit_weights, "Keep weight 1 on every DIMACS edge");
}

void add_solver_flags(CLI::App* cmd, SharedFlags& f) {
  add_instance_flags(cmd, f);
  cmd->add_flag("--no-pls", f.no_pls, "Start from an empty incumbent");
  cmd->add_option("--pls-iters", f.pls_iters, "PLS iterations (default 10)")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "PLS seed");
  cmd->add_option("--time-limit", f.time_limit, "Seconds before the search stops")->check(CLI::PositiveNumber);
  cmd->add_option("--node-limit", f.node_limit, "Search nodes before the search stops")
      ->check(CLI::PositiveNumber);
}

mewc::RunOptions to_options(const SharedFlags& f) {
  if (f.no_pls && f.pls_iters) throw std::invalid_argument("--no-pls and --pls-iters are mutually exclusive");
  mewc::RunOptions opt;
  if (f.format == "dimacs") opt.format = mewc::InstanceFormat::kDimacs;
  if (f.format == "wedge") opt.format = mewc::InstanceFormat::kWeighted;
  opt.dimacs_auto_weight = f.auto_weight;
  opt.unit_weights = f.unit_weights;
  opt.use_pls = !f.no_pls;
  if (f.pls_iters) opt.pls.iterations = *f.pls_iters;
  opt.pls.seed = f.seed;
  opt.time_limit = f.time_limit;
  opt.node_limit = f.node_limit;
  return opt;
}

std::string clique_string(const mewc::VertexSet& c) {
  std::string out;
  for (mewc::Vertex v : c) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + 1);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact maximum edge-weight clique solver"};
  app.require_subcommand(1);

  SharedFlags solve_flags;
  std::string solve_path;
  Output output = Output::kText;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  solve_cmd->add_option("instance", solve_path, "Instance file")->required();
  add_solver_flags(solve_cmd, solve_flags);
  solve_cmd->add_option("--output", output, "text|json|csv")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Output>{{"text", Output::kText}, {"json", Output::kJson}, {"csv", Output::kCsv}}));

  std::size_t gen_n = 0;
  double gen_density = 0.0;
  mewc::Weight gen_wmin = 1;
  mewc::Weight gen_wmax = 10;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random weighted instance");
  gen_cmd->add_option("--n", gen_n, "Vertex count")->required();
  gen_cmd->add_option("--density", gen_density, "Edge probability")->required();
  gen_cmd->add_option("--wmin", gen_wmin, "Minimum edge weight");
  gen_cmd->add_option("--wmax", gen_wmax, "Maximum edge weight");
  gen_cmd->add_option("--seed", gen_seed, "Generator seed");
  gen_cmd->add_option("--out", gen_out, "Output .wedge path")->required();

  SharedFlags bench_flags;
  std::vector<std::string> bench_paths;
  std::string bench_manifest;
  std::string bench_out;
  int bench_jobs = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Solve many instances and emit a CSV table");
  bench_cmd->add_option("instances", bench_paths, "Instance files");
  bench_cmd->add_option("--manifest", bench_manifest, "File listing instance paths");
  bench_cmd->add_option("--jobs", bench_jobs, "Parallel solves")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out", bench_out, "Write CSV here instead of stdout");
  add_solver_flags(bench_cmd, bench_flags);

  SharedFlags oracle_flags;
  std::string oracle_path;
  bool oracle_check = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force a small instance (n <= 20)");
  oracle_cmd->add_option("instance", oracle_path, "Instance file")->required();
  oracle_cmd->add_flag("--check", oracle_check, "Also run the solver and compare");
  add_instance_flags(oracle_cmd, oracle_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*solve_cmd) {
      const auto report = mewc::solve_file(solve_path, to_options(solve_flags));
      switch (output) {
        case Output::kText:
          std::cout << mewc::to_text(report);
          break;
        case Output::kJson:
          std::cout << mewc::to_json(report).dump(2) << '\n';
          break;
        case Output::kCsv:
          std::cout << mewc::csv_header() << '\n' << mewc::to_csv_row(report) << '\n';
          break;
      }
      return report.proven_optimal ? 0 : 2;
    }

    if (*gen_cmd) {
      const auto g = mewc::gen_random(gen_n, gen_density, gen_wmin, gen_wmax, gen_seed);
      mewc::write_text_file(gen_out, mewc::write_weighted_edge_list(g));
      return 0;
    }

    if (*bench_cmd) {
      std::vector<std::filesystem::path> paths;
      if (!bench_manifest.empty()) paths = mewc::read_manifest(bench_manifest);
      for (const auto& p : bench_paths) paths.emplace_back(p);
      if (paths.empty()) throw std::invalid_argument("bench needs instance paths or --manifest");
      const auto opt = to_options(bench_flags);
      const auto csv = mewc::bench_csv(mewc::run_bench(paths, opt, bench_jobs));
      if (bench_out.empty()) {
        std::cout << csv;
      } else {
        mewc::write_text_file(bench_out, csv);
      }
      return 0;
    }

    if (*oracle_cmd) {
      const auto opt = to_options(oracle_flags);
      const auto g = mewc::load_instance(oracle_path, opt);
      const auto truth = mewc::brute_force_mewc(g);
      std::cout << "weight " << truth.weight << '\n' << "clique " << clique_string(truth.clique) << '\n';
      if (oracle_check) {
        const auto res = mewc::solve(g, mewc::VertexSet(g.n()));
        if (res.best_weight != truth.weight) {
          std::cout << "check MISMATCH solver=" << res.best_weight << '\n';
          return 3;
        }
        std::cout << "check ok\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
