#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apsp/generator.hpp"

namespace apsp {

enum class Algorithm {
  kFw,
  kFwImprovedNatural,
  kFwImprovedMinProd,
  kDijkstra,
  kJohnson,
};

std::span<const Algorithm> all_algorithms();
std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct BenchConfig {
  int n = 1024;
  std::vector<Regime> regimes;        // empty = all regimes
  int trials = 10;
  std::vector<Algorithm> algorithms;  // empty = all algorithms
  std::uint64_t seed_base = 1;
  bool include_fw_baseline = true;    // run fw and report percentages of it
  std::int64_t weight_min = 1;
  std::int64_t weight_max = 100;
};

// One measured run. attempts is relaxation attempts for the matrix
// algorithms and total operation count (heap ops + edge relaxations) for the
// baselines. pct_of_fw is this run's wall time as a percentage of the fw run
// on the same graph, present only when the fw baseline is included.
struct BenchRecord {
  Algorithm algorithm;
  int n;
  std::int64_t m;
  Regime regime;
  int trial;
  std::uint64_t seed;
  std::uint64_t wall_time_ns;
  std::uint64_t attempts;
  std::optional<double> pct_of_fw;
};

// Runs trials x regimes x algorithms, one warm-up execution per (graph,
// algorithm) discarded, one measured run, all strictly sequential. The same
// seeded graph (seed_base + trial) is shared by every algorithm of a trial.
// Timing covers the solve call only. Progress lines go to *progress if set.
std::vector<BenchRecord> run_bench(const BenchConfig& config,
                                   std::ostream* progress = nullptr);

// CSV with header algorithm,n,m,regime,trial,seed,wall_time_ns,attempts,pct_of_fw.
void write_csv(std::span<const BenchRecord> records, std::ostream& out);

// Markdown table of mean pct_of_fw (or mean wall ms without the baseline)
// per algorithm x regime.
std::string format_table(const BenchConfig& config,
                         std::span<const BenchRecord> records);

}  // namespace apsp
