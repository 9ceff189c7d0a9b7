#include "apsp/floyd_warshall.hpp"

#include <cassert>
#include <cstdint>
#include <limits>
#include <vector>

namespace apsp {

FwResult fw_classic(const DistanceMatrix& input) {
  const int n = input.size();
  FwResult result{input, RelaxStats{}};
  DistanceMatrix& m = result.dist;
  RelaxStats& stats = result.stats;
  stats.attempts_per_iteration.reserve(n);
  stats.successes_per_iteration.reserve(n);
  stats.k_order.reserve(n);

  const std::uint64_t nn = static_cast<std::uint64_t>(n) * n;
  Weight* const cells = m.data();

  for (int k = 0; k < n; ++k) {
    const Weight* const krow = cells + static_cast<std::size_t>(k) * n;
    std::uint64_t useless = 0;
    std::uint64_t successes = 0;
    for (int i = 0; i < n; ++i) {
      Weight* const irow = cells + static_cast<std::size_t>(i) * n;
      const Weight dik = irow[k];
      const bool dik_inf = dik.is_infinite();
      for (int j = 0; j < n; ++j) {
        const Weight dkj = krow[j];
        if (dik_inf || dkj.is_infinite()) {
          ++useless;
          continue;
        }
        const Weight cand = Weight::finite(dik.value() + dkj.value());
        if (cand < irow[j]) {
          irow[j] = cand;
          ++successes;
        }
      }
      stats.attempts_total += static_cast<std::uint64_t>(n);
    }
    stats.attempts_per_iteration.push_back(nn);
    stats.successes_per_iteration.push_back(successes);
    stats.k_order.push_back(k);
    stats.useless_attempts += useless;
    stats.successes_total += successes;
  }
  return result;
}

namespace {

// Linear scan for the unprocessed vertex with the smallest |in| * |out|
// product; the ascending scan with strict "<" makes the lowest id win ties.
int select_min_product(const DynAdjacency& adj, const std::vector<char>& processed) {
  const int n = adj.vertex_count();
  int best = -1;
  std::uint64_t best_product = std::numeric_limits<std::uint64_t>::max();
  for (int v = 0; v < n; ++v) {
    if (processed[v]) continue;
    const std::uint64_t product =
        static_cast<std::uint64_t>(adj.in_degree(v)) * adj.out_degree(v);
    if (product < best_product) {
      best = v;
      best_product = product;
    }
  }
  assert(best >= 0);
  return best;
}

}  // namespace

FwResult fw_improved(const DistanceMatrix& input, OrderingStrategy strategy,
                     const IterationHook& hook, DynAdjacency* final_adjacency) {
  const int n = input.size();
  FwResult result{input, RelaxStats{}};
  DistanceMatrix& m = result.dist;
  RelaxStats& stats = result.stats;
  stats.attempts_per_iteration.reserve(n);
  stats.successes_per_iteration.reserve(n);
  stats.k_order.reserve(n);

  DynAdjacency adj = adjacency_from_matrix(m);
  Weight* const cells = m.data();
  std::vector<char> processed(n, 0);

  for (int step = 0; step < n; ++step) {
    const int k = strategy == OrderingStrategy::kNatural ? step
                                                         : select_min_product(adj, processed);
    processed[k] = 1;

    const std::span<const int> in_k = adj.in(k);
    const std::span<const int> out_k = adj.out(k);
    const std::size_t in_count = in_k.size();
    const std::size_t out_count = out_k.size();
    stats.attempts_per_iteration.push_back(
        static_cast<std::uint64_t>(in_count) * out_count);
    stats.k_order.push_back(k);

    const Weight* const krow = cells + static_cast<std::size_t>(k) * n;
    std::uint64_t successes = 0;

    for (std::size_t ii = 0; ii < in_count; ++ii) {
      const int i = in_k[ii];
      Weight* const irow = cells + static_cast<std::size_t>(i) * n;
      const Weight dik = irow[k];
      const bool dik_inf = dik.is_infinite();
      for (std::size_t jj = 0; jj < out_count; ++jj) {
        const int j = out_k[jj];
        const Weight dkj = krow[j];
        ++stats.attempts_total;
        if (dik_inf || dkj.is_infinite()) {
          // Unreachable by construction (see the lists' invariant); counted
          // rather than assumed so the stats prove it.
          ++stats.useless_attempts;
          continue;
        }
        const Weight cand = Weight::finite(dik.value() + dkj.value());
        if (cand < irow[j]) {
          if (irow[j].is_infinite()) adj.add_edge(i, j);
          irow[j] = cand;
          ++successes;
        }
      }
    }

    // New pairs never touch vertex k's own lists, so the iteration bounds
    // taken above stay valid through the whole iteration.
    assert(adj.in_degree(k) == in_count);
    assert(adj.out_degree(k) == out_count);

    stats.successes_per_iteration.push_back(successes);
    stats.successes_total += successes;
    if (hook) hook(k, m);
  }

  if (final_adjacency) *final_adjacency = std::move(adj);
  return result;
}

std::optional<int> detect_negative_cycle(const DistanceMatrix& m) {
  for (int i = 0; i < m.size(); ++i) {
    if (m(i, i) < Weight::finite(0)) return i;
  }
  return std::nullopt;
}

}  // namespace apsp
