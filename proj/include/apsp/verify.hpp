#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace apsp {

// Cross-checks every applicable algorithm on seeded random graphs: all
// distance matrices must agree cell for cell and the improved runs must
// report zero useless attempts. Dijkstra joins only when weights are
// non-negative. Graphs where the classic result shows a negative cycle count
// as agreement when every cycle-aware algorithm reports one too.
struct VerifyConfig {
  int n = 32;
  int trials = 10;
  std::uint64_t seed_base = 42;
  bool negative = false;  // weights [-10, 100] instead of [1, 100]
  int jobs = 1;           // >1 distributes trials over OpenMP threads
};

struct VerifyReport {
  int trials_total = 0;
  int trials_agreed = 0;
  std::string first_mismatch;  // empty when all agree

  bool all_agree() const { return trials_agreed == trials_total; }
};

VerifyReport run_verify(const VerifyConfig& config, std::ostream* log = nullptr);

}  // namespace apsp
