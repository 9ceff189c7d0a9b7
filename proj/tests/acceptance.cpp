// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line. Criterion 6 runs the full n=1024 benchmark protocol and takes a few
// minutes; everything else is fast.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

#include "apsp/bellman_ford.hpp"
#include "apsp/bench.hpp"
#include "apsp/dijkstra.hpp"
#include "apsp/errors.hpp"
#include "apsp/floyd_warshall.hpp"
#include "apsp/io.hpp"
#include "apsp/johnson.hpp"
#include "test_util.hpp"

using namespace apsp;
using namespace apsp::testing;

namespace {

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("[criterion %d] %s %s\n", criterion, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  CHECK_MESSAGE(ok, "criterion ", criterion, ": ", detail);
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

TEST_CASE("criterion 1: worked-example golden run") {
  // Warm run of both algorithms, then the measured ones.
  fw_improved(example5_initial(), OrderingStrategy::kMinInOutProduct);
  fw_classic(example5_initial());

  const auto t0 = Clock::now();
  const FwResult improved =
      fw_improved(example5_initial(), OrderingStrategy::kMinInOutProduct);
  const FwResult classic = fw_classic(example5_initial());
  const double elapsed = ms_since(t0);

  const std::vector<int> order_a{4, 2, 0, 1, 3};  // vertices 5,3,1,2,4
  const std::vector<int> order_b{4, 2, 0, 3, 1};  // 2 and 4 may swap
  const bool ok =
      improved.dist == example5_final() &&
      (improved.stats.k_order == order_a || improved.stats.k_order == order_b) &&
      improved.stats.attempts_per_iteration == std::vector<std::uint64_t>{2, 4, 8, 16, 16} &&
      improved.stats.attempts_total == 46 &&
      classic.dist == example5_final() &&
      classic.stats.attempts_total == 125 &&
      elapsed < 1.0;

  std::ostringstream detail;
  detail << "improved attempts=" << improved.stats.attempts_total
         << " classic attempts=" << classic.stats.attempts_total
         << " runtime=" << elapsed << "ms";
  report(1, ok, detail.str());
}

TEST_CASE("criterion 2: intermediate state after processing vertex 1") {
  DistanceMatrix prev = example5_initial();
  bool ok = false;
  const IterationHook hook = [&](int k, const DistanceMatrix& current) {
    if (k == 0) {
      ok = prev(2, 1).is_infinite() && prev(4, 1).is_infinite() &&
           prev(4, 3).is_infinite() && current(2, 1) == Weight::finite(4) &&
           current(4, 1) == Weight::finite(7) && current(4, 3) == Weight::finite(6) &&
           current == example5_after_vertex1();
    }
    prev = current;
  };
  fw_improved(example5_initial(), OrderingStrategy::kMinInOutProduct, hook);
  report(2, ok, "cells (3,2)=4, (5,2)=7, (5,4)=6 newly finite");
}

TEST_CASE("criteria 3-5: property suites over the random corpus") {
  const auto t0 = Clock::now();
  const auto& corpus = shared_corpus();

  bool theorem_ok = corpus.size() >= 200;
  bool oracle_ok = true;
  bool accounting_ok = true;
  std::size_t runs = 0;

  for (const auto& entry : corpus) {
    const int n = entry.matrix.size();
    const std::uint64_t n3 = static_cast<std::uint64_t>(n) * n * n;
    const FwResult classic = fw_classic(entry.matrix);

    DistanceMatrix johnson_dist = johnson(AdjacencyListGraph(entry.graph));
    oracle_ok &= johnson_dist == classic.dist;
    if (entry.non_negative) {
      oracle_ok &= dijkstra_apsp(AdjacencyListGraph(entry.graph)) == classic.dist;
    }

    for (const OrderingStrategy strategy :
         {OrderingStrategy::kNatural, OrderingStrategy::kMinInOutProduct}) {
      DynAdjacency final_adj(1);
      const FwResult improved = fw_improved(entry.matrix, strategy, {}, &final_adj);
      ++runs;

      theorem_ok &= improved.stats.useless_attempts == 0;
      oracle_ok &= improved.dist == classic.dist;

      const std::uint64_t product_sum =
          std::accumulate(improved.stats.attempts_per_iteration.begin(),
                          improved.stats.attempts_per_iteration.end(), std::uint64_t{0});
      const auto finite_cells =
          static_cast<std::size_t>(count_finite_off_diagonal(improved.dist));
      accounting_ok &= improved.stats.attempts_total == product_sum;
      accounting_ok &= improved.stats.attempts_total <= n3;
      accounting_ok &= final_adj.total_in_entries() == finite_cells;
      accounting_ok &= final_adj.total_out_entries() == finite_cells;
    }
  }

  const double elapsed_s = ms_since(t0) / 1000.0;
  theorem_ok &= elapsed_s < 30.0;

  {
    std::ostringstream detail;
    detail << "useless_attempts=0 in " << runs << " improved runs over "
           << corpus.size() << " graphs (" << elapsed_s << "s)";
    report(3, theorem_ok, detail.str());
  }
  report(4, oracle_ok,
         "fw = fw-improved-natural = fw-improved-minprod = johnson"
         " (= dijkstra when non-negative), cell for cell");
  report(5, accounting_ok,
         "attempts = sum |in(k)|*|out(k)| <= n^3; final lists hold 2M' entries");
}

TEST_CASE("criterion 6: directional benchmark at n=1024") {
  const int n = 1024;
  const std::uint64_t n3 = static_cast<std::uint64_t>(n) * n * n;

  // Wall-time comparison for the three sparsest regimes, fw baseline on.
  BenchConfig timed;
  timed.n = n;
  timed.regimes = {Regime::kHalfN, Regime::kN, Regime::kTwoN};
  timed.trials = 10;
  timed.algorithms = {Algorithm::kFw, Algorithm::kFwImprovedMinProd};
  timed.seed_base = 1;
  const auto timed_records = run_bench(timed, &std::cout);

  bool time_ok = true;
  std::ostringstream time_detail;
  for (const Regime regime : timed.regimes) {
    double pct_sum = 0;
    int count = 0;
    for (const auto& r : timed_records) {
      if (r.regime == regime && r.algorithm == Algorithm::kFwImprovedMinProd) {
        pct_sum += r.pct_of_fw.value();
        ++count;
      }
    }
    const double mean_pct = pct_sum / count;
    time_ok &= mean_pct < 100.0;
    time_detail << regime_name(regime) << "=" << mean_pct << "% ";
  }

  // Attempt-count monotonicity across the five sparsest regimes; no fw runs
  // needed for this half.
  BenchConfig counted;
  counted.n = n;
  counted.regimes = {Regime::kHalfN, Regime::kN, Regime::kTwoN, Regime::kFourN,
                     Regime::kLgNN};
  counted.trials = 10;
  counted.algorithms = {Algorithm::kFwImprovedMinProd};
  counted.include_fw_baseline = false;
  counted.seed_base = 1;
  const auto counted_records = run_bench(counted, &std::cout);

  std::map<Regime, double> mean_ratio;
  std::map<Regime, int> ratio_count;
  for (const auto& r : counted_records) {
    mean_ratio[r.regime] += static_cast<double>(r.attempts) / static_cast<double>(n3);
    ++ratio_count[r.regime];
  }
  bool ratio_ok = true;
  double prev_ratio = -1.0;
  std::ostringstream ratio_detail;
  for (const Regime regime : counted.regimes) {
    const double ratio = mean_ratio[regime] / ratio_count[regime];
    ratio_ok &= ratio > prev_ratio;
    prev_ratio = ratio;
    ratio_detail << regime_name(regime) << "=" << ratio << " ";
  }

  report(6, time_ok && ratio_ok,
         "mean pct of fw: " + time_detail.str() +
             "| attempts/n^3 increasing: " + ratio_detail.str());
}

TEST_CASE("criterion 7: negative-cycle handling") {
  const EdgeListGraph two_cycle(2, {{0, 1, 1}, {1, 0, -3}});
  const EdgeListGraph three_cycle(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, -3}});

  bool ok = true;
  for (const EdgeListGraph* g : {&two_cycle, &three_cycle}) {
    const AdjacencyListGraph adj(*g);
    bool bf_threw = false, johnson_threw = false;
    try {
      bellman_ford(adj, 0);
    } catch (const NegativeCycleError&) {
      bf_threw = true;
    }
    try {
      johnson(adj);
    } catch (const NegativeCycleError&) {
      johnson_threw = true;
    }
    const FwResult classic = fw_classic(matrix_from_edges(*g));
    ok &= bf_threw && johnson_threw && detect_negative_cycle(classic.dist).has_value();
  }
  report(7, ok, "bellman-ford, johnson and the diagonal check all flag both cycles");
}

TEST_CASE("criterion 8: legacy format fidelity") {
  std::istringstream legacy(example5_legacy_text());
  const DistanceMatrix input = read_matrix(legacy);  // default legacy(9999)

  const FwResult improved = fw_improved(input, OrderingStrategy::kMinInOutProduct);
  const FwResult classic = fw_classic(input);

  std::ostringstream rendered_initial, rendered_final;
  write_matrix(input, rendered_initial);
  write_matrix(improved.dist, rendered_final);

  const bool ok =
      input == example5_initial() && improved.dist == example5_final() &&
      improved.stats.attempts_total == 46 && classic.stats.attempts_total == 125 &&
      rendered_initial.str() ==
          "5\n0 6 X 5 X\n2 0 3 -1 2\n-2 X 0 2 X\n-1 1 2 0 -1\n1 X X X 0\n" &&
      rendered_final.str().find('X') == std::string::npos;
  report(8, ok, "9999-sentinel file round-trips; infinity renders as X");
}
