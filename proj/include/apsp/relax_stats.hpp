#pragma once

#include <cstdint>
#include <vector>

namespace apsp {

// Relaxation instrumentation shared by both all-pairs algorithms.
//
// attempts_total counts executed relaxation attempts one by one, while
// attempts_per_iteration records each outer iteration's planned attempt count
// (n^2 for the classic algorithm, |in(k)| * |out(k)| for the improved one);
// the two routes must agree. An attempt is "useless" when either operand of
// d[i][k] + d[k][j] is infinite, i.e. it can never fire.
struct RelaxStats {
  std::uint64_t attempts_total = 0;
  std::uint64_t successes_total = 0;
  std::uint64_t useless_attempts = 0;
  std::vector<std::uint64_t> attempts_per_iteration;
  std::vector<std::uint64_t> successes_per_iteration;
  std::vector<int> k_order;  // vertices in processing order, 0-based
};

}  // namespace apsp
