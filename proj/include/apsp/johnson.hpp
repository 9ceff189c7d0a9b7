#pragma once

#include <cstdint>
#include <vector>

#include "apsp/dijkstra.hpp"
#include "apsp/graph.hpp"

namespace apsp {

// Reweighting values from the Bellman-Ford phase: for every edge (u, v, w),
// w + h[u] - h[v] >= 0.
struct Potentials {
  std::vector<std::int64_t> h;
};

// Bellman-Ford from a virtual source (index n) with zero-weight edges to all
// vertices. Throws NegativeCycleError if the graph has any negative cycle.
Potentials compute_potentials(const AdjacencyListGraph& g,
                              BaselineStats* stats = nullptr);

// All-pairs shortest paths for graphs with negative edges: reweight with
// potentials, run Dijkstra from every source, then undo the reweighting.
// threads parallelizes the Dijkstra phase only; default is serial.
DistanceMatrix johnson(const AdjacencyListGraph& g, int threads = 1,
                       BaselineStats* stats = nullptr);

}  // namespace apsp
