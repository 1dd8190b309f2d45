#pragma once

// Randomized check of the Helly property in dimension d: whenever every
// (d+1)-subfamily of a finite family of polytopes intersects, the whole
// family must intersect. Families are generated around shared anchor points
// so the hypothesis is satisfied often; all checks are exact.

#include "certify/polytope.hpp"
#include "certify/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace certify::geo {

struct HellyStats {
  int dim = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  int subfamily_size = 0;
  std::uint64_t families = 0;
  std::uint64_t hypothesis_met = 0;
  std::uint64_t violations = 0;
  std::string first_violation;  // description of the first violating family
};

namespace detail {

inline Polytope random_anchored_polytope(int d, const Point& anchor, SplitMix64& rng) {
  const int count = d + 1 + static_cast<int>(rng.below(3));
  std::vector<Halfspace> hs;
  for (int c = 0; c < count; ++c) {
    Point a(static_cast<std::size_t>(d));
    bool nz = false;
    while (!nz) {
      for (int i = 0; i < d; ++i) {
        a[i] = Rat(rng.range(-2, 2));
        if (a[i] != 0) nz = true;
      }
    }
    Rat b(0);
    for (int i = 0; i < d; ++i) b += a[i] * anchor[i];
    b += make_rat(rng.range(0, 6), 2);  // slack keeps the anchor strictly inside
    hs.emplace_back(std::move(a), std::move(b));
  }
  return Polytope(d, std::move(hs));
}

// Three halfplanes that pairwise intersect but have empty total intersection:
// x <= 0, y <= 0, x + y >= 1.
inline std::vector<Polytope> pairwise_only_counterexample() {
  std::vector<Polytope> f;
  f.push_back(Polytope(2, {Halfspace({Rat(1), Rat(0)}, Rat(0))}));
  f.push_back(Polytope(2, {Halfspace({Rat(0), Rat(1)}, Rat(0))}));
  f.push_back(Polytope(2, {Halfspace({Rat(-1), Rat(-1)}, Rat(-1))}));
  return f;
}

inline std::string describe_family(const std::vector<Polytope>& fam) {
  std::string s;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    s += "P" + std::to_string(i + 1) + ": ";
    for (std::size_t j = 0; j < fam[i].halfspaces.size(); ++j) {
      if (j) s += ", ";
      s += fam[i].halfspaces[j].str();
    }
    s += "; ";
  }
  return s;
}

inline bool every_subfamily_nonempty(const std::vector<Polytope>& fam, int size) {
  const int m = static_cast<int>(fam.size());
  if (size >= m) size = m;
  std::vector<int> idx(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    Polytope inter = fam[idx[0]];
    for (int i = 1; i < size; ++i) inter = intersect(inter, fam[idx[i]]);
    if (polytope_empty(inter)) return false;
    int pos = size - 1;
    while (pos >= 0 && idx[pos] == m - size + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
  }
  return true;
}

}  // namespace detail

// subfamily_size 0 means the Helly bound d+1. Passing a smaller size weakens
// the hypothesis below that bound; with seed_counterexample the deterministic
// triangle family is injected as trial zero, which the weakened run must flag
// as a violation.
inline HellyStats helly_harness(int d, std::uint64_t trials, std::uint64_t seed,
                                int subfamily_size = 0, bool seed_counterexample = false) {
  if (d < 1 || d > 3) throw std::invalid_argument("helly harness supports d in {1,2,3}");
  HellyStats stats;
  stats.dim = d;
  stats.trials = trials;
  stats.seed = seed;
  stats.subfamily_size = subfamily_size == 0 ? d + 1 : subfamily_size;

  SplitMix64 root(seed);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::vector<Polytope> family;
    if (trial == 0 && seed_counterexample && d == 2) {
      family = detail::pairwise_only_counterexample();
    } else {
      SplitMix64 rng = root.fork(trial + 1);
      std::vector<Point> anchors;
      for (int i = 0; i < d + 2; ++i) {
        Point p(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) p[j] = make_rat(rng.range(-4, 4), 2);
        anchors.push_back(std::move(p));
      }
      const int m = d + 2 + static_cast<int>(rng.below(2));
      for (int i = 0; i < m; ++i)
        family.push_back(
            detail::random_anchored_polytope(d, anchors[rng.below(anchors.size())], rng));
    }

    ++stats.families;
    // A nonempty total intersection makes every subfamily nonempty, so the
    // hypothesis holds and no violation is possible; the subfamily scan is
    // only needed when the total intersection is empty.
    Polytope total = family[0];
    for (std::size_t i = 1; i < family.size(); ++i) total = intersect(total, family[i]);
    if (!polytope_empty(total)) {
      ++stats.hypothesis_met;
      continue;
    }
    if (detail::every_subfamily_nonempty(family, stats.subfamily_size)) {
      ++stats.hypothesis_met;
      ++stats.violations;
      if (stats.first_violation.empty())
        stats.first_violation = detail::describe_family(family);
    }
  }
  return stats;
}

}  // namespace certify::geo
