#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>

#include "apsp/distance_matrix.hpp"
#include "apsp/graph.hpp"

namespace apsp {

// How matrix input spells infinity. The token "INF" always parses to
// infinity; legacy mode additionally treats one numeric sentinel (9999 by
// default, the convention of older matrix files) as infinity and forces the
// diagonal to zero instead of rejecting nonzero diagonal entries.
struct InfinityMode {
  bool legacy_sentinel_enabled;
  std::int64_t sentinel;

  static InfinityMode canonical() { return {false, 0}; }
  static InfinityMode legacy(std::int64_t sentinel = 9999) { return {true, sentinel}; }
};

// Matrix text format: vertex count n, then n*n whitespace-separated cell
// tokens in row-major order. Throws ParseError with 1-based line/column on
// malformed tokens, wrong counts, out-of-bound weights, or (outside legacy
// mode) a nonzero diagonal.
DistanceMatrix read_matrix(std::istream& in, InfinityMode mode = InfinityMode::legacy());

// Writes n, then one line per row with single-space-separated cells;
// infinity is rendered as "X". Matrices without infinite cells round-trip
// through read_matrix exactly.
void write_matrix(const DistanceMatrix& m, std::ostream& out);

// Edge-list text format: comment lines start with "c", the header line is
// "p sp <n> <m>", and each edge line is "a <src> <dst> <weight>" with
// 1-based vertex ids.
EdgeListGraph read_edge_list(std::istream& in);
void write_edge_list(const EdgeListGraph& g, std::ostream& out,
                     std::string_view comment = {});

}  // namespace apsp
