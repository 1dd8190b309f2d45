#include "certify/nc_poly.hpp"
#include "certify/rational.hpp"

#include <doctest.h>

#include <vector>

using certify::Int;
using certify::SplitMix64;
using certify::ncring::NcPoly;

namespace {

NcPoly x() { return NcPoly::indeterminate("x"); }
NcPoly y() { return NcPoly::indeterminate("y"); }
NcPoly z() { return NcPoly::indeterminate("z"); }

NcPoly random_poly(SplitMix64& rng) {
  NcPoly p;
  const char* names[] = {"x", "y", "z"};
  int terms = 1 + static_cast<int>(rng.below(3));
  for (int t = 0; t < terms; ++t) {
    NcPoly mono = NcPoly::constant(rng.range(-3, 3));
    int len = static_cast<int>(rng.below(3));
    for (int k = 0; k < len; ++k) mono = mono * NcPoly::indeterminate(names[rng.below(3)]);
    p = p + mono;
  }
  return p;
}

}  // namespace

TEST_CASE("normalization") {
  CHECK((x() + y()) * z() == x() * z() + y() * z());
  NcPoly comm = x() * y() - y() * x();
  CHECK_FALSE(comm.is_zero());
  CHECK(comm.term_count() == 2);
  CHECK(x() * NcPoly::one() + NcPoly() == x());
  CHECK((x() - x()).is_zero());
  CHECK(NcPoly::constant(0).is_zero());
}

TEST_CASE("serialization is the length-then-lex normal form") {
  NcPoly p = x() * y() + NcPoly::constant(2) + y() * x() - NcPoly::constant(3) * x();
  CHECK(p.str() == "2 - 3 x + x y + y x");
  CHECK(NcPoly().str() == "0");
  CHECK((-x()).str() == "-x");
  CHECK(NcPoly::one().str() == "1");
}

TEST_CASE("ring laws on random triples, commutativity genuinely fails") {
  SplitMix64 rng(31);
  bool saw_noncommutative = false;
  std::string witness;
  for (int trial = 0; trial < 200; ++trial) {
    NcPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    if (a * b != b * a) {
      saw_noncommutative = true;
      if (witness.empty()) witness = (a * b - b * a).str();
    }
  }
  CHECK(saw_noncommutative);
  CHECK_FALSE(witness.empty());
  // the canonical witness
  CHECK((x() * y() - y() * x()).str() == "x y - y x");
}

TEST_CASE("integer coefficients are arbitrary precision") {
  NcPoly p = NcPoly::constant(1);
  for (int i = 1; i <= 25; ++i) p = p * NcPoly::constant(i);
  Int expect = 1;
  for (int i = 1; i <= 25; ++i) expect *= i;
  CHECK(p == NcPoly::constant(expect));
}
