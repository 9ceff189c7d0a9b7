#pragma once

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "apsp/weight.hpp"

namespace apsp {

// Binary min-heap over vertex ids [0, n) keyed by Weight, with decrease-key
// through an id -> heap-position map. All operations are O(log n).
class IndexMinHeap {
 public:
  explicit IndexMinHeap(int n) : pos_(n, kAbsent), key_(n) { heap_.reserve(n); }

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }
  bool contains(int id) const { return pos_[id] != kAbsent; }

  Weight key_of(int id) const {
    assert(contains(id));
    return key_[id];
  }

  void push(int id, Weight key) {
    assert(!contains(id));
    key_[id] = key;
    pos_[id] = heap_.size();
    heap_.push_back(id);
    sift_up(heap_.size() - 1);
  }

  void decrease_key(int id, Weight key) {
    assert(contains(id));
    assert(key <= key_[id]);
    key_[id] = key;
    sift_up(pos_[id]);
  }

  std::pair<int, Weight> pop_min() {
    assert(!heap_.empty());
    const int id = heap_[0];
    const Weight key = key_[id];
    const int last = heap_.back();
    heap_.pop_back();
    pos_[id] = kAbsent;
    if (!heap_.empty()) {
      heap_[0] = last;
      pos_[last] = 0;
      sift_down(0);
    }
    return {id, key};
  }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  void place(std::size_t slot, int id) {
    heap_[slot] = id;
    pos_[id] = slot;
  }

  void sift_up(std::size_t slot) {
    const int id = heap_[slot];
    const Weight key = key_[id];
    while (slot > 0) {
      const std::size_t parent = (slot - 1) / 2;
      if (key_[heap_[parent]] <= key) break;
      place(slot, heap_[parent]);
      slot = parent;
    }
    place(slot, id);
  }

  void sift_down(std::size_t slot) {
    const int id = heap_[slot];
    const Weight key = key_[id];
    const std::size_t count = heap_.size();
    for (;;) {
      std::size_t child = 2 * slot + 1;
      if (child >= count) break;
      if (child + 1 < count && key_[heap_[child + 1]] < key_[heap_[child]]) ++child;
      if (key <= key_[heap_[child]]) break;
      place(slot, heap_[child]);
      slot = child;
    }
    place(slot, id);
  }

  std::vector<int> heap_;         // heap slot -> id
  std::vector<std::size_t> pos_;  // id -> heap slot, kAbsent if not queued
  std::vector<Weight> key_;       // id -> current key (valid while queued)
};

}  // namespace apsp
