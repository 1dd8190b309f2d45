#pragma once

// Exact arbitrary-precision arithmetic, shared helpers and a tiny
// deterministic PRNG used by the randomized suites.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace certify {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Parses "p", "-p" or "p/q".
inline Rat parse_rat(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

inline int sign_of(const Rat& q) { return sgn(q); }

// splitmix64: fixed algorithm, identical streams on every platform.
// std::uniform_* distributions are not pinned by the standard, so all
// randomized suites draw through this.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("below(0)");
    return next() % bound;
  }

  // uniform in [lo, hi] inclusive
  long range(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("bad range");
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  SplitMix64 fork(std::uint64_t salt) {
    SplitMix64 child(state ^ (salt * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL));
    child.next();
    return child;
  }
};

}  // namespace certify
