#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <limits>

namespace apsp {

// Path weight over the extended integers: either a finite signed value or
// positive infinity ("no path"). Infinity absorbs addition and compares
// greater than every finite value.
//
// Finite magnitudes are capped at load time (see kMaxFiniteMagnitude) so that
// n * max|w| sums stay far away from the internal infinity encoding.
class Weight {
 public:
  // Load-time bound on finite edge weights: |w| <= 2^40.
  static constexpr std::int64_t kMaxFiniteMagnitude = std::int64_t{1} << 40;

  constexpr Weight() = default;  // Finite(0)

  static constexpr Weight finite(std::int64_t v) {
    assert(v != kInfRaw);
    return Weight(v);
  }

  static constexpr Weight infinity() { return Weight(kInfRaw); }

  constexpr bool is_finite() const { return raw_ != kInfRaw; }
  constexpr bool is_infinite() const { return raw_ == kInfRaw; }

  // Numeric value; only meaningful for finite weights.
  constexpr std::int64_t value() const {
    assert(is_finite());
    return raw_;
  }

  // Absorbing addition: inf + x = x + inf = inf.
  friend constexpr Weight operator+(Weight a, Weight b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return finite(a.raw_ + b.raw_);
  }

  // Raw comparison is correct as-is: the infinity encoding sorts last.
  friend constexpr bool operator==(Weight, Weight) = default;
  friend constexpr std::strong_ordering operator<=>(Weight, Weight) = default;

 private:
  static constexpr std::int64_t kInfRaw = std::numeric_limits<std::int64_t>::max();

  constexpr explicit Weight(std::int64_t raw) : raw_(raw) {}

  std::int64_t raw_ = 0;
};

}  // namespace apsp
