#include "apsp/dijkstra.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cassert>

#include "apsp/binary_heap.hpp"
#include "apsp/errors.hpp"

namespace apsp {

namespace {

void check_non_negative(const AdjacencyListGraph& g) {
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (const auto& arc : g.out(u)) {
      if (arc.weight < 0) throw NegativeEdgeError(u, arc.dst, arc.weight);
    }
  }
}

}  // namespace

SsspResult detail::dijkstra_no_precheck(const AdjacencyListGraph& g, int source,
                                        BaselineStats* stats,
                                        DijkstraTrace* trace) {
  const int n = g.vertex_count();
  SsspResult result;
  result.source = source;
  result.dist.assign(n, Weight::infinity());
  result.dist[source] = Weight::finite(0);

  // All vertices enter the heap up front; unreached ones carry infinity and
  // are never expanded.
  IndexMinHeap heap(n);
  heap.push(source, Weight::finite(0));
  for (int v = 0; v < n; ++v) {
    if (v != source) heap.push(v, Weight::infinity());
  }

  BaselineStats local;
  local.heap_pushes += static_cast<std::uint64_t>(n);

  while (!heap.empty()) {
    const auto [u, du] = heap.pop_min();
    ++local.heap_pops;
    if (trace) trace->extractions.emplace_back(u, du);
    if (du.is_infinite()) break;  // everything left is unreachable
    for (const auto& arc : g.out(u)) {
      ++local.edge_relaxations;
      const Weight cand = Weight::finite(du.value() + arc.weight);
      if (cand < result.dist[arc.dst]) {
        result.dist[arc.dst] = cand;
        heap.decrease_key(arc.dst, cand);
        ++local.decrease_keys;
      }
    }
  }

  if (stats) *stats += local;
  return result;
}

SsspResult dijkstra_sssp(const AdjacencyListGraph& g, int source,
                         BaselineStats* stats, DijkstraTrace* trace) {
  assert(source >= 0 && source < g.vertex_count());
  check_non_negative(g);
  return detail::dijkstra_no_precheck(g, source, stats, trace);
}

DistanceMatrix dijkstra_apsp(const AdjacencyListGraph& g, int threads,
                             BaselineStats* stats) {
  check_non_negative(g);
  const int n = g.vertex_count();
  DistanceMatrix m(n);

  auto solve_row = [&](int source, BaselineStats* row_stats) {
    SsspResult r = detail::dijkstra_no_precheck(g, source, row_stats, nullptr);
    auto row = m.row(source);
    for (int v = 0; v < n; ++v) row[v] = r.dist[v];
  };

#ifdef _OPENMP
  if (threads > 1) {
    BaselineStats total;
#pragma omp parallel num_threads(threads)
    {
      BaselineStats thread_stats;
#pragma omp for schedule(dynamic)
      for (int source = 0; source < n; ++source) solve_row(source, &thread_stats);
#pragma omp critical
      total += thread_stats;
    }
    if (stats) *stats += total;
    return m;
  }
#else
  (void)threads;
#endif

  for (int source = 0; source < n; ++source) solve_row(source, stats);
  return m;
}

}  // namespace apsp
