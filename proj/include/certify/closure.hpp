#pragma once

// Breadth-first subgroup closure: exact group order when it fits under the
// cap, ExceedsCap otherwise. Deduplication uses engine equality through
// canonical element keys, so the result is independent of generator order
// and of redundant generators.

#include "certify/engine.hpp"

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace certify::run {

struct ClosureOutcome {
  bool exceeded = false;
  std::uint64_t order = 0;  // valid when !exceeded

  bool operator==(const ClosureOutcome& o) const {
    return exceeded == o.exceeded && (exceeded || order == o.order);
  }
};

// Word growth guard: free-group images can grow without the element count
// repeating, so enumeration also stops once the stored elements' total
// weight passes this budget. Engines with constant-size elements never hit it
// before the cap does.
inline std::uint64_t closure_weight_budget(std::uint64_t cap) { return 64 * cap + 1024; }

template <class E>
ClosureOutcome subgroup_closure(const std::vector<E>& gens, std::uint64_t cap) {
  if (gens.empty()) throw std::invalid_argument("closure requires at least one generator");
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");

  std::vector<E> steps;
  for (const E& g : gens) {
    steps.push_back(g);
    steps.push_back(inv(g));
  }

  std::unordered_set<std::string> seen;
  std::deque<E> frontier;
  std::uint64_t count = 0, weight = 0;
  const std::uint64_t budget = closure_weight_budget(cap);

  auto visit = [&](const E& e) {
    if (!seen.insert(element_key(e)).second) return false;
    ++count;
    weight += element_weight(e);
    frontier.push_back(e);
    return true;
  };

  visit(identity_like(gens.front()));
  while (!frontier.empty()) {
    E cur = frontier.front();
    frontier.pop_front();
    for (const E& s : steps) {
      visit(mul(cur, s));
      if (count > cap || weight > budget) return {true, 0};
    }
  }
  return {false, count};
}

}  // namespace certify::run
