#include "apsp/generator.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <random>
#include <string>
#include <unordered_map>

#include "apsp/errors.hpp"

namespace apsp {

namespace {

constexpr std::array<Regime, 9> kRegimes = {
    Regime::kHalfN,   Regime::kN,        Regime::kTwoN,
    Regime::kFourN,   Regime::kLgNN,     Regime::kTwoLgNN,
    Regime::kFourLgNN, Regime::kNOverLgNN, Regime::kHalfNN,
};

constexpr std::array<std::string_view, 9> kRegimeNames = {
    "n-half", "n", "2n", "4n", "lgn-n", "2lgn-n", "4lgn-n", "n-over-lgn-n", "n2-half",
};

// Unbiased draw in [0, bound) by threshold rejection; together with
// mt19937_64 this fixes the byte-exact output of the generator.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

int ceil_log2(int n) { return static_cast<int>(std::bit_width(static_cast<unsigned>(n) - 1)); }

}  // namespace

std::span<const Regime> all_regimes() { return kRegimes; }

std::string_view regime_name(Regime r) { return kRegimeNames[static_cast<std::size_t>(r)]; }

std::optional<Regime> parse_regime(std::string_view name) {
  for (std::size_t i = 0; i < kRegimeNames.size(); ++i) {
    if (kRegimeNames[i] == name) return kRegimes[i];
  }
  return std::nullopt;
}

std::int64_t regime_edge_count(int n, Regime r) {
  if (n < 2) throw ValidationError("regimes need n >= 2");
  const std::int64_t N = n;
  const std::int64_t clg = ceil_log2(n);
  std::int64_t m = 0;
  switch (r) {
    case Regime::kHalfN: m = std::llround(N / 2.0); break;
    case Regime::kN: m = N; break;
    case Regime::kTwoN: m = 2 * N; break;
    case Regime::kFourN: m = 4 * N; break;
    case Regime::kLgNN: m = clg * N; break;
    case Regime::kTwoLgNN: m = 2 * clg * N; break;
    case Regime::kFourLgNN: m = 4 * clg * N; break;
    case Regime::kNOverLgNN:
      m = static_cast<std::int64_t>(std::ceil(static_cast<double>(N) / std::log2(static_cast<double>(N)))) * N;
      break;
    case Regime::kHalfNN: m = std::llround(static_cast<double>(N) * N / 2.0); break;
  }
  const std::int64_t max_m = N * (N - 1);
  if (m < 0) m = 0;
  if (m > max_m) m = max_m;
  return m;
}

std::int64_t GenSpec::resolved_edge_count() const {
  if (regime.has_value() == edge_count.has_value())
    throw ValidationError("specify exactly one of regime or edge count");
  return regime ? regime_edge_count(n, *regime) : *edge_count;
}

EdgeListGraph generate_graph(const GenSpec& spec) {
  if (spec.n < 1) throw ValidationError("vertex count must be >= 1");
  if (spec.weight_min > spec.weight_max)
    throw ValidationError("weight_min must be <= weight_max");
  if (spec.weight_max > Weight::kMaxFiniteMagnitude ||
      spec.weight_min < -Weight::kMaxFiniteMagnitude)
    throw ValidationError("weight range exceeds |w| <= 2^40");

  const std::int64_t n = spec.n;
  const std::int64_t pair_count = n * (n - 1);
  const std::int64_t m = spec.resolved_edge_count();
  if (m < 0 || m > pair_count)
    throw ValidationError("edge count " + std::to_string(m) + " outside [0, " +
                          std::to_string(pair_count) + "]");

  std::mt19937_64 rng(spec.seed);

  // Partial Fisher-Yates over the virtual array a[p] = p of ordered-pair
  // indices; only displaced entries are stored. Exactly uniform without
  // replacement, O(m) memory.
  std::unordered_map<std::int64_t, std::int64_t> displaced;
  displaced.reserve(static_cast<std::size_t>(m) * 2);
  std::vector<std::int64_t> chosen(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    const std::int64_t j =
        i + static_cast<std::int64_t>(bounded(rng, static_cast<std::uint64_t>(pair_count - i)));
    const auto it = displaced.find(j);
    const std::int64_t a_j = it == displaced.end() ? j : it->second;
    chosen[static_cast<std::size_t>(i)] = a_j;
    const auto self = displaced.find(i);
    displaced[j] = self == displaced.end() ? i : self->second;
  }

  const std::uint64_t weight_span =
      static_cast<std::uint64_t>(spec.weight_max - spec.weight_min) + 1;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    const std::int64_t p = chosen[static_cast<std::size_t>(i)];
    const int u = static_cast<int>(p / (n - 1));
    const std::int64_t r = p % (n - 1);
    const int v = static_cast<int>(r < u ? r : r + 1);
    const std::int64_t w =
        spec.weight_min + static_cast<std::int64_t>(bounded(rng, weight_span));
    edges.push_back({u, v, w});
  }
  return EdgeListGraph(spec.n, std::move(edges));
}

}  // namespace apsp
