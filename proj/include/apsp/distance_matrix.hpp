#pragma once

#include <cassert>
#include <span>
#include <vector>

#include "apsp/weight.hpp"

namespace apsp {

// Dense n x n matrix of path weights. cell(i, j) is the currently known
// distance from i to j; fresh matrices start as "no paths yet" (zero
// diagonal, infinity elsewhere).
class DistanceMatrix {
 public:
  explicit DistanceMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n, Weight::infinity()) {
    assert(n >= 1);
    for (int i = 0; i < n; ++i) cells_[flat(i, i)] = Weight::finite(0);
  }

  int size() const { return n_; }

  Weight operator()(int i, int j) const { return cells_[flat(i, j)]; }
  Weight& operator()(int i, int j) { return cells_[flat(i, j)]; }

  std::span<const Weight> row(int i) const { return {cells_.data() + flat(i, 0), static_cast<std::size_t>(n_)}; }
  std::span<Weight> row(int i) { return {cells_.data() + flat(i, 0), static_cast<std::size_t>(n_)}; }

  const Weight* data() const { return cells_.data(); }
  Weight* data() { return cells_.data(); }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t flat(int i, int j) const {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_);
    return static_cast<std::size_t>(i) * n_ + j;
  }

  int n_;
  std::vector<Weight> cells_;
};

}  // namespace apsp
