#include "apsp/verify.hpp"

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "apsp/bellman_ford.hpp"
#include "apsp/dijkstra.hpp"
#include "apsp/errors.hpp"
#include "apsp/floyd_warshall.hpp"
#include "apsp/generator.hpp"
#include "apsp/johnson.hpp"

namespace apsp {

namespace {

std::string cell_str(Weight w) {
  return w.is_infinite() ? "INF" : std::to_string(w.value());
}

struct TrialOutcome {
  bool agreed = false;
  std::string note;      // short status for the log
  std::string mismatch;  // detail when agreed == false
};

std::string first_divergent_cell(const DistanceMatrix& a, std::string_view a_name,
                                 const DistanceMatrix& b, std::string_view b_name) {
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      if (a(i, j) != b(i, j)) {
        std::ostringstream os;
        os << "cell (" << i + 1 << ", " << j + 1 << "): " << a_name << '='
           << cell_str(a(i, j)) << ' ' << b_name << '=' << cell_str(b(i, j));
        return os.str();
      }
    }
  }
  return {};
}

TrialOutcome run_trial(const VerifyConfig& config, int trial) {
  TrialOutcome outcome;

  GenSpec spec;
  spec.n = config.n;
  if (config.n >= 2) {
    spec.regime = all_regimes()[static_cast<std::size_t>(trial) % all_regimes().size()];
  } else {
    spec.edge_count = 0;
  }
  spec.weight_min = config.negative ? -10 : 1;
  spec.weight_max = 100;
  spec.seed = config.seed_base + static_cast<std::uint64_t>(trial);

  const EdgeListGraph graph = generate_graph(spec);
  const DistanceMatrix matrix = matrix_from_edges(graph);
  const AdjacencyListGraph adj(graph);

  const FwResult classic = fw_classic(matrix);
  const FwResult natural = fw_improved(matrix, OrderingStrategy::kNatural);
  const FwResult minprod = fw_improved(matrix, OrderingStrategy::kMinInOutProduct);

  if (natural.stats.useless_attempts != 0 || minprod.stats.useless_attempts != 0) {
    outcome.mismatch = "useless attempts in improved run: natural=" +
                       std::to_string(natural.stats.useless_attempts) +
                       " minprod=" + std::to_string(minprod.stats.useless_attempts);
    return outcome;
  }

  std::ostringstream note;
  note << "m=" << graph.edge_count();

  if (detect_negative_cycle(classic.dist)) {
    // All algorithms must agree that a negative cycle exists; distance
    // matrices are not comparable in this case.
    if (!detect_negative_cycle(natural.dist)) {
      outcome.mismatch = "classic detects a negative cycle, improved-natural does not";
      return outcome;
    }
    if (!detect_negative_cycle(minprod.dist)) {
      outcome.mismatch = "classic detects a negative cycle, improved-minprod does not";
      return outcome;
    }
    try {
      johnson(adj);
      outcome.mismatch = "classic detects a negative cycle, johnson does not";
      return outcome;
    } catch (const NegativeCycleError&) {
    }
    note << " negative cycle detected consistently";
    outcome.agreed = true;
    outcome.note = note.str();
    return outcome;
  }

  if (auto diff = first_divergent_cell(classic.dist, "fw", natural.dist, "fw-improved-natural");
      !diff.empty()) {
    outcome.mismatch = diff;
    return outcome;
  }
  if (auto diff = first_divergent_cell(classic.dist, "fw", minprod.dist, "fw-improved-minprod");
      !diff.empty()) {
    outcome.mismatch = diff;
    return outcome;
  }

  DistanceMatrix johnson_dist(1);
  try {
    johnson_dist = johnson(adj);
  } catch (const NegativeCycleError& e) {
    outcome.mismatch = "johnson reports a negative cycle (vertex " +
                       std::to_string(e.vertex() + 1) + ") but classic does not";
    return outcome;
  }
  if (auto diff = first_divergent_cell(classic.dist, "fw", johnson_dist, "johnson");
      !diff.empty()) {
    outcome.mismatch = diff;
    return outcome;
  }

  if (!config.negative) {
    const DistanceMatrix dij = dijkstra_apsp(adj);
    if (auto diff = first_divergent_cell(classic.dist, "fw", dij, "dijkstra");
        !diff.empty()) {
      outcome.mismatch = diff;
      return outcome;
    }
  }

  outcome.agreed = true;
  outcome.note = note.str();
  return outcome;
}

}  // namespace

VerifyReport run_verify(const VerifyConfig& config, std::ostream* log) {
  if (config.n < 1) throw ValidationError("n must be >= 1");
  if (config.trials < 1) throw ValidationError("trials must be >= 1");

  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(config.trials));

  const auto work = [&](int t) {
    try {
      outcomes[static_cast<std::size_t>(t)] = run_trial(config, t);
    } catch (const std::exception& e) {
      outcomes[static_cast<std::size_t>(t)].mismatch = std::string("exception: ") + e.what();
    }
  };

#ifdef _OPENMP
  if (config.jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(config.jobs)
    for (int t = 0; t < config.trials; ++t) work(t);
  } else {
    for (int t = 0; t < config.trials; ++t) work(t);
  }
#else
  for (int t = 0; t < config.trials; ++t) work(t);
#endif

  VerifyReport report;
  report.trials_total = config.trials;
  if (log && config.negative) *log << "dijkstra: skipped (negative weights)\n";
  for (int t = 0; t < config.trials; ++t) {
    const TrialOutcome& o = outcomes[static_cast<std::size_t>(t)];
    if (o.agreed) {
      ++report.trials_agreed;
      if (log) *log << "trial " << t << ": ok (" << o.note << ")\n";
    } else {
      if (report.first_mismatch.empty())
        report.first_mismatch = "trial " + std::to_string(t) + ": " + o.mismatch;
      if (log) *log << "trial " << t << ": MISMATCH " << o.mismatch << '\n';
    }
  }
  if (log)
    *log << report.trials_agreed << '/' << report.trials_total << " agree\n";
  return report;
}

}  // namespace apsp
