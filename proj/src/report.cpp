#include "mewc/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "mewc/solver.hpp"

namespace mewc {
namespace {

std::string fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_clique(const std::vector<std::size_t>& clique) {
  std::string out;
  for (std::size_t i = 0; i < clique.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(clique[i]);
  }
  return out;
}

}  // namespace

double round_to(double x, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(x * scale) / scale;
}

WeightedGraph load_instance(const std::filesystem::path& path, const RunOptions& opt) {
  if (opt.dimacs_auto_weight && opt.unit_weights) {
    throw std::invalid_argument("--dimacs-auto-weight and --unit-weights are mutually exclusive");
  }
  const InstanceFormat format = opt.format.value_or(format_for_path(path));
  const std::string text = read_text_file(path);
  if (format == InstanceFormat::kWeighted) {
    if (opt.dimacs_auto_weight || opt.unit_weights) {
      throw std::invalid_argument("weighting flags apply only to DIMACS input");
    }
    return parse_weighted_edge_list(text);
  }
  if (!opt.dimacs_auto_weight && !opt.unit_weights) {
    throw std::invalid_argument("plain DIMACS input needs --dimacs-auto-weight or --unit-weights");
  }
  WeightedGraph g = parse_dimacs(text);
  return opt.dimacs_auto_weight ? apply_dimacs_weights(g) : g;
}

SolveReport solve_graph(const WeightedGraph& g, const std::string& name, const RunOptions& opt) {
  using clock = std::chrono::steady_clock;
  SolveReport r;
  r.instance = name;
  r.n = g.n();
  r.density = round_to(density(g), 2);

  VertexSet initial(g.n());
  if (opt.use_pls) {
    const auto t0 = clock::now();
    const PlsResult warm = pls(g, opt.pls);
    r.pls_time = std::chrono::duration<double>(clock::now() - t0).count();
    initial = warm.clique;
    r.lb = warm.weight;
  }

  SolverConfig cfg;
  cfg.time_limit = opt.time_limit;
  cfg.node_limit = opt.node_limit;
  MecqSolver solver(g, cfg);
  const SolveResult res = solver.solve(initial);
  r.solve_time = res.elapsed.count();
  r.total_time = r.pls_time + r.solve_time;
  r.best_weight = res.best_weight;
  for (Vertex v : res.best_clique) r.clique.push_back(static_cast<std::size_t>(v) + 1);
  r.iterations = res.iterations;
  r.proven_optimal = res.proven_optimal;
  return r;
}

SolveReport solve_file(const std::filesystem::path& path, const RunOptions& opt) {
  const WeightedGraph g = load_instance(path, opt);
  return solve_graph(g, path.filename().string(), opt);
}

nlohmann::ordered_json to_json(const SolveReport& r) {
  nlohmann::ordered_json j;
  j["instance"] = r.instance;
  j["n"] = r.n;
  j["density"] = round_to(r.density, 2);
  j["lb"] = r.lb;
  j["pls_time"] = round_to(r.pls_time, 3);
  j["solve_time"] = round_to(r.solve_time, 3);
  j["total_time"] = round_to(r.total_time, 3);
  j["best_weight"] = r.best_weight;
  j["clique"] = r.clique;
  j["iterations"] = r.iterations;
  j["proven_optimal"] = r.proven_optimal;
  return j;
}

std::string to_text(const SolveReport& r) {
  std::ostringstream os;
  os << "instance        " << r.instance << '\n'
     << "n               " << r.n << '\n'
     << "density         " << fixed(r.density, 2) << '\n'
     << "lb              " << r.lb << '\n'
     << "pls_time        " << fixed(r.pls_time, 3) << '\n'
     << "solve_time      " << fixed(r.solve_time, 3) << '\n'
     << "total_time      " << fixed(r.total_time, 3) << '\n'
     << "best_weight     " << r.best_weight << '\n'
     << "clique          " << join_clique(r.clique) << '\n'
     << "iterations      " << r.iterations << '\n'
     << "proven_optimal  " << (r.proven_optimal ? "true" : "false") << '\n';
  return os.str();
}

std::string csv_header() {
  return "instance,n,density,lb,pls_time,solve_time,total_time,best_weight,clique,iterations,proven_optimal";
}

std::string to_csv_row(const SolveReport& r) {
  std::string row = csv_field(r.instance);
  row += ',' + std::to_string(r.n);
  row += ',' + fixed(r.density, 2);
  row += ',' + std::to_string(r.lb);
  row += ',' + fixed(r.pls_time, 3);
  row += ',' + fixed(r.solve_time, 3);
  row += ',' + fixed(r.total_time, 3);
  row += ',' + std::to_string(r.best_weight);
  row += ',' + join_clique(r.clique);
  row += ',' + std::to_string(r.iterations);
  row += r.proven_optimal ? ",true" : ",false";
  return row;
}

}  // namespace mewc
