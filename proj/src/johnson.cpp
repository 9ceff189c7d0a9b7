#include "apsp/johnson.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cassert>
#include <vector>

#include "apsp/bellman_ford.hpp"
#include "apsp/binary_heap.hpp"
#include "apsp/errors.hpp"

namespace apsp {

Potentials compute_potentials(const AdjacencyListGraph& g, BaselineStats* stats) {
  const int n = g.vertex_count();

  // Augmented graph: virtual source n with a zero-weight edge to everything.
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.arc_count()) + n);
  for (int v = 0; v < n; ++v) edges.push_back({n, v, 0});
  for (int u = 0; u < n; ++u) {
    for (const auto& arc : g.out(u)) edges.push_back({u, arc.dst, arc.weight});
  }
  const AdjacencyListGraph augmented(n + 1, edges);

  SsspResult from_virtual;
  try {
    from_virtual = bellman_ford(augmented, n, stats);
  } catch (const NegativeCycleError& e) {
    // The virtual source is not on any cycle, so the witness is a real vertex.
    assert(e.vertex() < n);
    throw;
  }

  Potentials p;
  p.h.resize(n);
  for (int v = 0; v < n; ++v) {
    // The virtual source reaches every vertex, so every potential is finite.
    p.h[v] = from_virtual.dist[v].value();
  }
  return p;
}

DistanceMatrix johnson(const AdjacencyListGraph& g, int threads,
                       BaselineStats* stats) {
  const int n = g.vertex_count();
  const Potentials p = compute_potentials(g, stats);

  // Reweight: w'(u, v) = w + h[u] - h[v] >= 0 by the shortest-path property
  // of the potentials.
  std::vector<Edge> reweighted;
  reweighted.reserve(static_cast<std::size_t>(g.arc_count()));
  for (int u = 0; u < n; ++u) {
    for (const auto& arc : g.out(u)) {
      const std::int64_t w = arc.weight + p.h[u] - p.h[arc.dst];
      assert(w >= 0);
      reweighted.push_back({u, arc.dst, w});
    }
  }
  const AdjacencyListGraph non_negative(n, reweighted);

  DistanceMatrix m(n);
  auto solve_row = [&](int source, BaselineStats* row_stats) {
    SsspResult r = detail::dijkstra_no_precheck(non_negative, source, row_stats, nullptr);
    auto row = m.row(source);
    for (int v = 0; v < n; ++v) {
      // Undo the reweighting; unreachable pairs stay infinite.
      row[v] = r.dist[v].is_finite()
                   ? Weight::finite(r.dist[v].value() - p.h[source] + p.h[v])
                   : Weight::infinity();
    }
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
