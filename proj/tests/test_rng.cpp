#include "tcd/rng.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"

using namespace tcd;

TEST_CASE("identical seeds give identical streams") {
  SeededRng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("below stays in range and covers it") {
  SeededRng r(7);
  std::vector<int> seen(5, 0);
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t x = r.below(5);
    REQUIRE(x < 5);
    ++seen[x];
  }
  for (int c : seen) CHECK(c > 0);
}

TEST_CASE("bernoulli extremes") {
  SeededRng r(3);
  for (int i = 0; i < 64; ++i) CHECK_FALSE(r.bernoulli(0.0));
  for (int i = 0; i < 64; ++i) CHECK(r.bernoulli(1.0));
}

TEST_CASE("shuffle permutes deterministically") {
  std::vector<int> v(10);
  std::iota(v.begin(), v.end(), 0);
  SeededRng a(11);
  a.shuffle(v);
  std::vector<int> w = v;
  std::sort(w.begin(), w.end());
  for (int i = 0; i < 10; ++i) CHECK(w[i] == i);

  std::vector<int> u(10);
  std::iota(u.begin(), u.end(), 0);
  SeededRng b(11);
  b.shuffle(u);
  CHECK(u == v);
}

TEST_CASE("child streams are reproducible and distinct") {
  SeededRng a(5), b(5);
  SeededRng c1 = a.child(1);
  SeededRng c2 = b.child(1);
  CHECK(c1.next() == c2.next());

  SeededRng d(5);
  SeededRng e1 = d.child(1);
  SeededRng e2 = d.child(2);
  CHECK(e1.next() != e2.next());  // astronomically unlikely to collide
}
