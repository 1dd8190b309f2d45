#include "certify/polytope.hpp"

#include <doctest.h>

#include <vector>

using namespace certify;
using namespace certify::geo;

namespace {

Polytope make(int d, std::vector<std::pair<std::vector<long>, long>> rows) {
  std::vector<Halfspace> hs;
  for (auto& [coeffs, bound] : rows) {
    Point a;
    for (long c : coeffs) a.push_back(Rat(c));
    hs.emplace_back(std::move(a), Rat(bound));
  }
  return Polytope(d, std::move(hs));
}

Polytope random_polytope(SplitMix64& rng, int d) {
  int count = 1 + static_cast<int>(rng.below(6));
  std::vector<Halfspace> hs;
  for (int c = 0; c < count; ++c) {
    Point a(static_cast<std::size_t>(d));
    bool nz = false;
    while (!nz)
      for (int i = 0; i < d; ++i) {
        a[i] = Rat(rng.range(-3, 3));
        if (a[i] != 0) nz = true;
      }
    hs.emplace_back(std::move(a), make_rat(rng.range(-4, 8), 2));
  }
  return Polytope(d, std::move(hs));
}

}  // namespace

TEST_CASE("one-dimensional emptiness") {
  // x >= 1 and x <= 0
  CHECK(polytope_empty(make(1, {{{-1}, -1}, {{1}, 0}})));
  CHECK_FALSE(polytope_empty(make(1, {{{-1}, -1}, {{1}, 5}})));
}

TEST_CASE("unit box witness") {
  Polytope box = make(2, {{{1, 0}, 1}, {{-1, 0}, 0}, {{0, 1}, 1}, {{0, -1}, 0}});
  auto w = polytope_witness(box);
  REQUIRE(w.has_value());
  CHECK(satisfies(box, *w));
}

TEST_CASE("pairwise-intersecting triple with empty intersection") {
  // x <= 0, y <= 0, x + y >= 1: the classic negative control
  Polytope a = make(2, {{{1, 0}, 0}});
  Polytope b = make(2, {{{0, 1}, 0}});
  Polytope c = make(2, {{{-1, -1}, -1}});
  CHECK_FALSE(polytope_empty(intersect(a, b)));
  CHECK_FALSE(polytope_empty(intersect(a, c)));
  CHECK_FALSE(polytope_empty(intersect(b, c)));
  CHECK(polytope_empty(intersect(intersect(a, b), c)));
}

TEST_CASE("witnesses satisfy all constraints exactly") {
  SplitMix64 rng(41);
  int nonempty = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int d = 1 + static_cast<int>(rng.below(3));
    Polytope p = random_polytope(rng, d);
    auto w = polytope_witness(p);
    if (w) {
      ++nonempty;
      CHECK(satisfies(p, *w));
    }
  }
  CHECK(nonempty > 50);
}

TEST_CASE("polytopes built around a known point are never reported empty") {
  // guards the Empty verdict itself: a false Empty would show up here
  SplitMix64 rng(47);
  for (int trial = 0; trial < 300; ++trial) {
    int d = 1 + static_cast<int>(rng.below(4));
    Point anchor;
    for (int i = 0; i < d; ++i) anchor.push_back(make_rat(rng.range(-9, 9), 3));
    std::vector<Halfspace> hs;
    int count = 1 + static_cast<int>(rng.below(8));
    for (int c = 0; c < count; ++c) {
      Point a(static_cast<std::size_t>(d));
      bool nz = false;
      while (!nz)
        for (int i = 0; i < d; ++i) {
          a[i] = Rat(rng.range(-4, 4));
          if (a[i] != 0) nz = true;
        }
      Rat b(0);
      for (int i = 0; i < d; ++i) b += a[i] * anchor[i];
      b += make_rat(rng.range(0, 5), 2);
      hs.emplace_back(std::move(a), std::move(b));
    }
    Polytope p(d, std::move(hs));
    auto w = polytope_witness(p);
    REQUIRE(w.has_value());
    CHECK(satisfies(p, *w));
    CHECK(satisfies(p, anchor));
  }
}

TEST_CASE("adding a halfspace never revives an empty polytope") {
  SplitMix64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    int d = 1 + static_cast<int>(rng.below(3));
    Polytope p = random_polytope(rng, d);
    bool was_empty = polytope_empty(p);
    Polytope bigger = intersect(p, random_polytope(rng, d));
    if (was_empty) CHECK(polytope_empty(bigger));
    // and the reverse: a nonempty intersection certifies both parts nonempty
    if (!polytope_empty(bigger)) CHECK_FALSE(was_empty);
  }
}

TEST_CASE("desk-scale caps") {
  std::vector<Halfspace> many;
  for (int i = 0; i < 65; ++i) many.emplace_back(Point{Rat(1)}, Rat(i));
  CHECK_THROWS_AS(polytope_empty(Polytope(1, many)), std::invalid_argument);

  Point a5(5, Rat(1));
  CHECK_THROWS_AS(polytope_empty(Polytope(5, {Halfspace(a5, Rat(0))})), std::invalid_argument);
  CHECK_THROWS(Halfspace(Point{Rat(0), Rat(0)}, Rat(1)));
}
