#include <doctest.h>

#include <random>
#include <vector>

#include "apsp/weight.hpp"

using apsp::Weight;

TEST_CASE("finite addition") {
  CHECK(Weight::finite(3) + Weight::finite(-2) == Weight::finite(1));
  CHECK(Weight::finite(0) + Weight::finite(0) == Weight::finite(0));
}

TEST_CASE("infinity absorbs addition") {
  CHECK((Weight::infinity() + Weight::finite(5)).is_infinite());
  CHECK((Weight::finite(5) + Weight::infinity()).is_infinite());
  CHECK((Weight::infinity() + Weight::infinity()).is_infinite());
  CHECK((Weight::infinity() + Weight::finite(-1000)).is_infinite());
}

TEST_CASE("ordering: infinity above every finite value") {
  CHECK(Weight::finite(100) < Weight::infinity());
  CHECK(Weight::finite(-5) < Weight::finite(3));
  CHECK(Weight::finite(Weight::kMaxFiniteMagnitude) < Weight::infinity());
  CHECK(Weight::infinity() == Weight::infinity());
}

TEST_CASE("relaxation comparison from the worked example") {
  // d21 = 3 + (-2) = 1 beats the current value 2, so the relaxation fires.
  const Weight candidate = Weight::finite(3) + Weight::finite(-2);
  CHECK(candidate == Weight::finite(1));
  CHECK(candidate < Weight::finite(2));
}

TEST_CASE("addition is commutative and associative over the extended domain") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> value(-1000, 1000);
  std::uniform_int_distribution<int> pick_inf(0, 4);
  const auto draw = [&]() {
    return pick_inf(rng) == 0 ? Weight::infinity() : Weight::finite(value(rng));
  };
  for (int i = 0; i < 2000; ++i) {
    const Weight a = draw(), b = draw(), c = draw();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
  }
}
