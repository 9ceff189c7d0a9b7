#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "apsp/graph.hpp"

namespace apsp {

// Edge-count families used by the benchmark harness, as functions of n.
enum class Regime {
  kHalfN,      // n/2
  kN,          // n
  kTwoN,       // 2n
  kFourN,      // 4n
  kLgNN,       // ceil(lg n) * n
  kTwoLgNN,    // 2 ceil(lg n) * n
  kFourLgNN,   // 4 ceil(lg n) * n
  kNOverLgNN,  // ceil(n / lg n) * n
  kHalfNN,     // n^2 / 2
};

std::span<const Regime> all_regimes();
std::string_view regime_name(Regime r);
std::optional<Regime> parse_regime(std::string_view name);

// Edge count for a regime at size n (n >= 2): evaluated per the table above
// with lg = log2, rounded to nearest (ties away from zero) where fractional,
// then clamped to [0, n*(n-1)].
std::int64_t regime_edge_count(int n, Regime r);

// Parameters for seeded G(n, M) generation: exactly M distinct ordered pairs
// u != v drawn uniformly, weights i.i.d. uniform in [weight_min, weight_max].
struct GenSpec {
  int n = 2;
  std::optional<Regime> regime;            // exactly one of regime/edge_count
  std::optional<std::int64_t> edge_count;
  std::int64_t weight_min = 1;
  std::int64_t weight_max = 100;
  std::uint64_t seed = 0;

  std::int64_t resolved_edge_count() const;
};

// Deterministic function of the spec: the same seed reproduces the same
// graph byte for byte on every platform (mt19937_64 with threshold-rejection
// bounded draws; see README for the exact draw sequence).
EdgeListGraph generate_graph(const GenSpec& spec);

}  // namespace apsp
