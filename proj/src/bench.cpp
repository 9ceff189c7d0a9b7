#include "apsp/bench.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "apsp/dijkstra.hpp"
#include "apsp/errors.hpp"
#include "apsp/floyd_warshall.hpp"
#include "apsp/johnson.hpp"

namespace apsp {

namespace {

constexpr std::array<Algorithm, 5> kAlgorithms = {
    Algorithm::kFw, Algorithm::kFwImprovedNatural, Algorithm::kFwImprovedMinProd,
    Algorithm::kDijkstra, Algorithm::kJohnson,
};

constexpr std::array<std::string_view, 5> kAlgorithmNames = {
    "fw", "fw-improved-natural", "fw-improved-minprod", "dijkstra", "johnson",
};

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ns(Clock::time_point t0, Clock::time_point t1) {
  const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
  return ns > 0 ? static_cast<std::uint64_t>(ns) : 1;  // clock-resolution floor
}

// One full solve; returns (wall ns, work count). The matrix/adjacency inputs
// are prepared by the caller so only the solve is timed.
std::pair<std::uint64_t, std::uint64_t> run_one(Algorithm algo,
                                                const DistanceMatrix& matrix,
                                                const AdjacencyListGraph& adj) {
  switch (algo) {
    case Algorithm::kFw: {
      const auto t0 = Clock::now();
      FwResult r = fw_classic(matrix);
      const auto t1 = Clock::now();
      return {elapsed_ns(t0, t1), r.stats.attempts_total};
    }
    case Algorithm::kFwImprovedNatural:
    case Algorithm::kFwImprovedMinProd: {
      const OrderingStrategy strategy = algo == Algorithm::kFwImprovedNatural
                                            ? OrderingStrategy::kNatural
                                            : OrderingStrategy::kMinInOutProduct;
      const auto t0 = Clock::now();
      FwResult r = fw_improved(matrix, strategy);
      const auto t1 = Clock::now();
      return {elapsed_ns(t0, t1), r.stats.attempts_total};
    }
    case Algorithm::kDijkstra: {
      BaselineStats stats;
      const auto t0 = Clock::now();
      DistanceMatrix m = dijkstra_apsp(adj, 1, &stats);
      const auto t1 = Clock::now();
      (void)m;
      return {elapsed_ns(t0, t1), stats.ops_total()};
    }
    case Algorithm::kJohnson: {
      BaselineStats stats;
      const auto t0 = Clock::now();
      DistanceMatrix m = johnson(adj, 1, &stats);
      const auto t1 = Clock::now();
      (void)m;
      return {elapsed_ns(t0, t1), stats.ops_total()};
    }
  }
  throw Error("unknown algorithm");
}

std::string format_pct(double pct) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", pct);
  return buf;
}

}  // namespace

std::span<const Algorithm> all_algorithms() { return kAlgorithms; }

std::string_view algorithm_name(Algorithm a) {
  return kAlgorithmNames[static_cast<std::size_t>(a)];
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (std::size_t i = 0; i < kAlgorithmNames.size(); ++i) {
    if (kAlgorithmNames[i] == name) return kAlgorithms[i];
  }
  return std::nullopt;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config, std::ostream* progress) {
  if (config.trials < 1) throw ValidationError("trials must be >= 1");
  if (config.n < 2) throw ValidationError("bench needs n >= 2");

  std::vector<Regime> regimes(config.regimes);
  if (regimes.empty()) regimes.assign(all_regimes().begin(), all_regimes().end());
  std::vector<Algorithm> algorithms(config.algorithms);
  if (algorithms.empty()) algorithms.assign(all_algorithms().begin(), all_algorithms().end());

  if (config.weight_min < 0) {
    for (Algorithm a : algorithms) {
      if (a == Algorithm::kDijkstra)
        throw ValidationError("dijkstra requires non-negative weights");
    }
  }

  bool fw_requested = false;
  for (Algorithm a : algorithms) fw_requested |= a == Algorithm::kFw;
  if (config.include_fw_baseline && !fw_requested)
    throw ValidationError("fw baseline requested but fw is not in the algorithm set");

  std::vector<BenchRecord> records;
  records.reserve(regimes.size() * config.trials * algorithms.size());

  for (const Regime regime : regimes) {
    for (int trial = 0; trial < config.trials; ++trial) {
      const std::uint64_t seed = config.seed_base + static_cast<std::uint64_t>(trial);
      GenSpec spec;
      spec.n = config.n;
      spec.regime = regime;
      spec.weight_min = config.weight_min;
      spec.weight_max = config.weight_max;
      spec.seed = seed;
      const EdgeListGraph graph = generate_graph(spec);
      const DistanceMatrix matrix = matrix_from_edges(graph);
      const AdjacencyListGraph adj(graph);

      // fw first so its time can serve as the denominator of this trial.
      std::vector<Algorithm> order;
      if (config.include_fw_baseline) order.push_back(Algorithm::kFw);
      for (Algorithm a : algorithms) {
        if (!(config.include_fw_baseline && a == Algorithm::kFw)) order.push_back(a);
      }

      std::uint64_t fw_ns = 0;
      for (const Algorithm algo : order) {
        run_one(algo, matrix, adj);  // warm-up, discarded
        const auto [ns, attempts] = run_one(algo, matrix, adj);
        if (algo == Algorithm::kFw) fw_ns = ns;

        BenchRecord rec;
        rec.algorithm = algo;
        rec.n = config.n;
        rec.m = graph.edge_count();
        rec.regime = regime;
        rec.trial = trial;
        rec.seed = seed;
        rec.wall_time_ns = ns;
        rec.attempts = attempts;
        if (config.include_fw_baseline)
          rec.pct_of_fw = 100.0 * static_cast<double>(ns) / static_cast<double>(fw_ns);
        records.push_back(rec);

        if (progress) {
          *progress << "bench n=" << config.n << " regime=" << regime_name(regime)
                    << " trial=" << trial << ' ' << algorithm_name(algo) << ' '
                    << static_cast<double>(ns) / 1e6 << " ms";
          if (rec.pct_of_fw) *progress << " (" << format_pct(*rec.pct_of_fw) << "% of fw)";
          *progress << std::endl;
        }
      }
    }
  }
  return records;
}

void write_csv(std::span<const BenchRecord> records, std::ostream& out) {
  out << "algorithm,n,m,regime,trial,seed,wall_time_ns,attempts,pct_of_fw\n";
  for (const BenchRecord& r : records) {
    out << algorithm_name(r.algorithm) << ',' << r.n << ',' << r.m << ','
        << regime_name(r.regime) << ',' << r.trial << ',' << r.seed << ','
        << r.wall_time_ns << ',' << r.attempts << ',';
    if (r.pct_of_fw) out << format_pct(*r.pct_of_fw);
    out << '\n';
  }
  if (!out) throw Error("csv write failed");
}

std::string format_table(const BenchConfig& config, std::span<const BenchRecord> records) {
  std::vector<Regime> regimes(config.regimes);
  if (regimes.empty()) regimes.assign(all_regimes().begin(), all_regimes().end());
  std::vector<Algorithm> algorithms(config.algorithms);
  if (algorithms.empty()) algorithms.assign(all_algorithms().begin(), all_algorithms().end());
  if (config.include_fw_baseline) {
    bool has_fw = false;
    for (Algorithm a : algorithms) has_fw |= a == Algorithm::kFw;
    if (!has_fw) algorithms.insert(algorithms.begin(), Algorithm::kFw);
  }

  const bool pct = config.include_fw_baseline;
  std::ostringstream out;
  out << (pct ? "Mean wall time as % of fw, by edge regime (" : "Mean wall time in ms, by edge regime (")
      << config.trials << " trial" << (config.trials == 1 ? "" : "s") << ", n=" << config.n << ")\n\n";
  out << "| algorithm |";
  for (const Regime r : regimes) out << ' ' << regime_name(r) << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < regimes.size(); ++i) out << "---|";
  out << '\n';

  for (const Algorithm a : algorithms) {
    out << "| " << algorithm_name(a) << " |";
    for (const Regime r : regimes) {
      double sum = 0;
      int count = 0;
      for (const BenchRecord& rec : records) {
        if (rec.algorithm != a || rec.regime != r) continue;
        sum += pct ? rec.pct_of_fw.value_or(0.0) : static_cast<double>(rec.wall_time_ns) / 1e6;
        ++count;
      }
      char buf[32];
      if (count == 0)
        std::snprintf(buf, sizeof(buf), "-");
      else
        std::snprintf(buf, sizeof(buf), pct ? "%.1f%%" : "%.3f", sum / count);
      out << ' ' << buf << " |";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace apsp
