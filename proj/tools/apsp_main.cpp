#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "apsp/bellman_ford.hpp"
#include "apsp/bench.hpp"
#include "apsp/dijkstra.hpp"
#include "apsp/errors.hpp"
#include "apsp/floyd_warshall.hpp"
#include "apsp/generator.hpp"
#include "apsp/io.hpp"
#include "apsp/johnson.hpp"
#include "apsp/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // validation / verification / data errors
constexpr int kExitUsage = 2;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw apsp::Error("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw apsp::Error("cannot open '" + path + "' for writing");
  return out;
}

// APSP_SEED overrides --seed-base for verify and bench.
void apply_seed_env(std::uint64_t& seed_base) {
  const char* env = std::getenv("APSP_SEED");
  if (!env || !*env) return;
  try {
    seed_base = std::stoull(env);
  } catch (const std::exception&) {
    throw apsp::ValidationError(std::string("APSP_SEED is not a number: ") + env);
  }
}

std::vector<int> one_based(const std::vector<int>& order) {
  std::vector<int> out;
  out.reserve(order.size());
  for (int v : order) out.push_back(v + 1);
  return out;
}

struct GenArgs {
  int n = 0;
  std::string regime;
  std::optional<std::int64_t> m;
  std::int64_t wmin = 1;
  std::int64_t wmax = 100;
  std::uint64_t seed = 0;
  std::string out_path;
};

int cmd_gen(const GenArgs& args) {
  apsp::GenSpec spec;
  spec.n = args.n;
  if (!args.regime.empty()) {
    const auto regime = apsp::parse_regime(args.regime);
    if (!regime) throw apsp::ValidationError("unknown regime '" + args.regime + "'");
    spec.regime = *regime;
  }
  spec.edge_count = args.m;
  spec.weight_min = args.wmin;
  spec.weight_max = args.wmax;
  spec.seed = args.seed;

  const apsp::EdgeListGraph graph = apsp::generate_graph(spec);

  std::ostringstream meta;
  meta << "gen n=" << spec.n << " m=" << graph.edge_count() << " wmin=" << spec.weight_min
       << " wmax=" << spec.weight_max << " seed=" << spec.seed;
  auto out = open_output(args.out_path);
  apsp::write_edge_list(graph, out, meta.str());

  std::cout << "m=" << graph.edge_count() << " seed=" << spec.seed << '\n';
  return kExitOk;
}

struct SolveArgs {
  std::string algo;
  std::string order = "minprod";
  std::string matrix_path;
  std::string edges_path;
  std::string out_path;
  bool stats = false;
  std::int64_t legacy_inf = 9999;
  bool strict_inf = false;
};

int cmd_solve(const SolveArgs& args) {
  std::optional<apsp::DistanceMatrix> matrix;
  std::optional<apsp::EdgeListGraph> edges;
  if (!args.matrix_path.empty()) {
    auto in = open_input(args.matrix_path);
    const auto mode = args.strict_inf ? apsp::InfinityMode::canonical()
                                      : apsp::InfinityMode::legacy(args.legacy_inf);
    matrix = apsp::read_matrix(in, mode);
  } else {
    auto in = open_input(args.edges_path);
    edges = apsp::read_edge_list(in);
  }

  const apsp::DistanceMatrix input =
      matrix ? *matrix : apsp::matrix_from_edges(*edges);
  const int n = input.size();

  apsp::DistanceMatrix result(1);
  json stats;

  if (args.algo == "fw" || args.algo == "fw-improved") {
    apsp::FwResult r = args.algo == "fw"
                           ? apsp::fw_classic(input)
                           : apsp::fw_improved(input, args.order == "natural"
                                                          ? apsp::OrderingStrategy::kNatural
                                                          : apsp::OrderingStrategy::kMinInOutProduct);
    if (const auto cycle = apsp::detect_negative_cycle(r.dist))
      throw apsp::NegativeCycleError(*cycle);
    const std::string name =
        args.algo == "fw" ? "fw" : std::string("fw-improved-") + args.order;
    stats = json{{"algorithm", name},
                 {"n", n},
                 {"attempts_total", r.stats.attempts_total},
                 {"successes_total", r.stats.successes_total},
                 {"useless_attempts", r.stats.useless_attempts},
                 {"attempts_per_iteration", r.stats.attempts_per_iteration},
                 {"successes_per_iteration", r.stats.successes_per_iteration},
                 {"k_order", one_based(r.stats.k_order)}};
    result = std::move(r.dist);
  } else if (args.algo == "dijkstra" || args.algo == "johnson") {
    const apsp::AdjacencyListGraph adj =
        edges ? apsp::AdjacencyListGraph(*edges)
              : apsp::AdjacencyListGraph(apsp::edges_from_matrix(input));
    apsp::BaselineStats ops;
    result = args.algo == "dijkstra" ? apsp::dijkstra_apsp(adj, 1, &ops)
                                     : apsp::johnson(adj, 1, &ops);
    stats = json{{"algorithm", args.algo},
                 {"n", n},
                 {"heap_pushes", ops.heap_pushes},
                 {"heap_pops", ops.heap_pops},
                 {"decrease_keys", ops.decrease_keys},
                 {"edge_relaxations", ops.edge_relaxations},
                 {"ops_total", ops.ops_total()}};
  } else {
    throw apsp::ValidationError("unknown algorithm '" + args.algo + "'");
  }

  if (args.out_path.empty()) {
    apsp::write_matrix(result, std::cout);
  } else {
    auto out = open_output(args.out_path);
    apsp::write_matrix(result, out);
  }
  if (args.stats) std::cout << stats.dump() << '\n';
  return kExitOk;
}

struct VerifyArgs {
  apsp::VerifyConfig config;
};

int cmd_verify(VerifyArgs args) {
  apply_seed_env(args.config.seed_base);
  const apsp::VerifyReport report = apsp::run_verify(args.config, &std::cout);
  if (report.all_agree()) return kExitOk;
  std::cerr << "first mismatch: " << report.first_mismatch << '\n';
  return kExitFailure;
}

struct BenchArgs {
  apsp::BenchConfig config;
  std::vector<std::string> regimes;
  std::vector<std::string> algos;
  std::string csv_path;
  std::string table_path;
  bool no_fw_baseline = false;
  bool quiet = false;
};

int cmd_bench(BenchArgs args) {
  apply_seed_env(args.config.seed_base);
  for (const auto& name : args.regimes) {
    const auto regime = apsp::parse_regime(name);
    if (!regime) throw apsp::ValidationError("unknown regime '" + name + "'");
    args.config.regimes.push_back(*regime);
  }
  for (const auto& name : args.algos) {
    const auto algo = apsp::parse_algorithm(name);
    if (!algo) throw apsp::ValidationError("unknown algorithm '" + name + "'");
    args.config.algorithms.push_back(*algo);
  }
  if (args.no_fw_baseline) {
    args.config.include_fw_baseline = false;
  } else if (!args.config.algorithms.empty()) {
    bool has_fw = false;
    for (auto a : args.config.algorithms) has_fw |= a == apsp::Algorithm::kFw;
    args.config.include_fw_baseline = has_fw;
  }

  const auto records = apsp::run_bench(args.config, args.quiet ? nullptr : &std::cerr);

  if (args.csv_path.empty()) {
    apsp::write_csv(records, std::cout);
  } else {
    auto out = open_output(args.csv_path);
    apsp::write_csv(records, out);
  }

  const std::string table = apsp::format_table(args.config, records);
  if (args.table_path.empty()) {
    std::cout << table;
  } else {
    auto out = open_output(args.table_path);
    out << table;
    if (!out) throw apsp::Error("table write failed");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"All-pairs shortest paths toolkit: generate, solve, verify, benchmark"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random directed graph");
  gen_cmd->add_option("--n", gen.n, "vertex count")->required();
  auto* regime_opt = gen_cmd->add_option("--regime", gen.regime,
                                         "edge regime (n-half, n, 2n, 4n, lgn-n, 2lgn-n, "
                                         "4lgn-n, n-over-lgn-n, n2-half)");
  auto* m_opt = gen_cmd->add_option("--m", gen.m, "explicit edge count");
  regime_opt->excludes(m_opt);
  gen_cmd->add_option("--wmin", gen.wmin, "minimum edge weight");
  gen_cmd->add_option("--wmax", gen.wmax, "maximum edge weight");
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_option("--out", gen.out_path, "output edge-list file")->required();

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve all-pairs shortest paths");
  solve_cmd->add_option("--algo", solve.algo, "fw | fw-improved | dijkstra | johnson")->required();
  solve_cmd->add_option("--order", solve.order, "fw-improved ordering: natural | minprod")
      ->check(CLI::IsMember({"natural", "minprod"}));
  auto* matrix_opt = solve_cmd->add_option("--matrix", solve.matrix_path, "input matrix file");
  auto* edges_opt = solve_cmd->add_option("--edges", solve.edges_path, "input edge-list file");
  matrix_opt->excludes(edges_opt);
  solve_cmd->add_option("--out", solve.out_path, "output matrix file (default stdout)");
  solve_cmd->add_flag("--stats", solve.stats, "print a JSON stats record to stdout");
  solve_cmd->add_option("--legacy-inf", solve.legacy_inf,
                        "numeric token treated as infinity in matrix input (default 9999)");
  solve_cmd->add_flag("--strict-inf", solve.strict_inf,
                      "only the token INF means infinity; reject nonzero diagonals");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check all algorithms on random graphs");
  verify_cmd->add_option("--n", verify.config.n, "vertex count")->required();
  verify_cmd->add_option("--trials", verify.config.trials, "number of seeded graphs");
  verify_cmd->add_option("--seed-base", verify.config.seed_base, "seed of trial 0");
  verify_cmd->add_flag("--negative", verify.config.negative, "weights in [-10, 100], skip dijkstra");
  verify_cmd->add_option("--jobs", verify.config.jobs, "OpenMP threads across trials (default 1)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Timed comparison over regimes and trials");
  bench_cmd->add_option("--n", bench.config.n, "vertex count (default 1024)");
  bench_cmd->add_option("--regimes", bench.regimes, "comma-separated regimes (default all)")
      ->delimiter(',');
  bench_cmd->add_option("--trials", bench.config.trials, "trials per regime (default 10)");
  bench_cmd->add_option("--algos", bench.algos, "comma-separated algorithms (default all)")
      ->delimiter(',');
  bench_cmd->add_option("--seed-base", bench.config.seed_base, "seed of trial 0");
  bench_cmd->add_option("--wmin", bench.config.weight_min, "minimum edge weight (default 1)");
  bench_cmd->add_option("--wmax", bench.config.weight_max, "maximum edge weight (default 100)");
  bench_cmd->add_option("--csv", bench.csv_path, "CSV output file (default stdout)");
  bench_cmd->add_option("--table", bench.table_path, "markdown table output file (default stdout)");
  bench_cmd->add_flag("--no-fw-baseline", bench.no_fw_baseline,
                      "do not compute percentages of the fw run");
  bench_cmd->add_flag("--quiet", bench.quiet, "suppress per-run progress on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) {
      if (gen.regime.empty() && !gen.m)
        throw apsp::ValidationError("one of --regime or --m is required");
      return cmd_gen(gen);
    }
    if (solve_cmd->parsed()) {
      if (solve.matrix_path.empty() == solve.edges_path.empty())
        throw apsp::ValidationError("exactly one of --matrix or --edges is required");
      return cmd_solve(solve);
    }
    if (verify_cmd->parsed()) return cmd_verify(verify);
    if (bench_cmd->parsed()) return cmd_bench(bench);
  } catch (const apsp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
