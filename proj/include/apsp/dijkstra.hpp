#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "apsp/distance_matrix.hpp"
#include "apsp/graph.hpp"
#include "apsp/weight.hpp"

namespace apsp {

// Work counters for the comparison baselines, reported next to wall time so
// benchmark results stay meaningful across machines.
struct BaselineStats {
  std::uint64_t heap_pushes = 0;
  std::uint64_t heap_pops = 0;
  std::uint64_t decrease_keys = 0;
  std::uint64_t edge_relaxations = 0;

  std::uint64_t ops_total() const {
    return heap_pushes + heap_pops + decrease_keys + edge_relaxations;
  }

  BaselineStats& operator+=(const BaselineStats& o) {
    heap_pushes += o.heap_pushes;
    heap_pops += o.heap_pops;
    decrease_keys += o.decrease_keys;
    edge_relaxations += o.edge_relaxations;
    return *this;
  }
};

struct SsspResult {
  int source = 0;
  std::vector<Weight> dist;  // dist[source] = 0; infinity iff unreachable
};

// Extraction log for tests: (vertex, key) in pop order.
struct DijkstraTrace {
  std::vector<std::pair<int, Weight>> extractions;
};

// Single-source shortest paths with a binary heap and decrease-key.
// Requires non-negative weights; throws NegativeEdgeError otherwise.
SsspResult dijkstra_sssp(const AdjacencyListGraph& g, int source,
                         BaselineStats* stats = nullptr,
                         DijkstraTrace* trace = nullptr);

// One Dijkstra run per source. threads > 1 distributes sources over OpenMP
// threads (each run is independent); the default is strictly serial, which is
// what the benchmark harness uses.
DistanceMatrix dijkstra_apsp(const AdjacencyListGraph& g, int threads = 1,
                             BaselineStats* stats = nullptr);

namespace detail {
// Skips the non-negativity scan; callers have already established it.
SsspResult dijkstra_no_precheck(const AdjacencyListGraph& g, int source,
                                BaselineStats* stats, DijkstraTrace* trace);
}

}  // namespace apsp
