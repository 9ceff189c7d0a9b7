#pragma once

#include "apsp/dijkstra.hpp"
#include "apsp/graph.hpp"

namespace apsp {

// Single-source shortest paths allowing negative weights: n-1 full rounds of
// edge relaxation plus one detection round. Throws NegativeCycleError (with
// an on-cycle witness vertex) if a negative cycle is reachable from source.
SsspResult bellman_ford(const AdjacencyListGraph& g, int source,
                        BaselineStats* stats = nullptr);

}  // namespace apsp
