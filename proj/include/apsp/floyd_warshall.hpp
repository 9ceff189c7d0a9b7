#pragma once

#include <functional>
#include <optional>

#include "apsp/distance_matrix.hpp"
#include "apsp/graph.hpp"
#include "apsp/relax_stats.hpp"

namespace apsp {

// How the improved algorithm picks the next vertex to process.
enum class OrderingStrategy {
  kNatural,          // 0, 1, ..., n-1
  kMinInOutProduct,  // unprocessed vertex minimizing |in| * |out|, lowest id on ties
};

struct FwResult {
  DistanceMatrix dist;
  RelaxStats stats;
};

// Called after each outer iteration with the vertex just processed and the
// matrix state at that point. Empty hooks cost nothing measurable.
using IterationHook = std::function<void(int k, const DistanceMatrix& current)>;

// Classic relaxation over every (k, i, j) triple, in place on a copy of the
// input. attempts_total is always n^3. Negative cycles surface as negative
// diagonal cells in the result; see detect_negative_cycle.
FwResult fw_classic(const DistanceMatrix& input);

// Relaxation restricted to (i, j) in in(k) x out(k), with the lists extended
// whenever a cell turns finite, so no attempt ever touches an infinite
// operand. The lists are built internally from the input matrix. If
// final_adjacency is non-null it receives the lists as of termination.
FwResult fw_improved(const DistanceMatrix& input, OrderingStrategy strategy,
                     const IterationHook& hook = {},
                     DynAdjacency* final_adjacency = nullptr);

// Lowest vertex with a negative diagonal cell in an all-pairs result, if any.
std::optional<int> detect_negative_cycle(const DistanceMatrix& m);

}  // namespace apsp
