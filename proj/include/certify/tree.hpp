#pragma once

// Finite simplicial trees: automorphism groups, fixed vertices and inverted
// edges of subgroups, the Helly property for subtrees (Helly number 2), and
// exhaustive sweeps over isomorphism classes. Edge midpoints are formal
// objects; when a connected picture is needed the barycentric subdivision is
// used, whose vertex count still fits in a 32-bit mask at desk scale.

#include "certify/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace certify::tree {

struct Tree {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based endpoints, u < v

  static Tree from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) throw std::invalid_argument("tree needs >= 1 vertex");
    if (static_cast<int>(edges.size()) != n - 1)
      throw std::invalid_argument("tree needs exactly n-1 edges");
    Tree t;
    t.n = n;
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n || u == v)
        throw std::invalid_argument("bad edge");
      t.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(t.edges.begin(), t.edges.end());
    for (std::size_t i = 1; i < t.edges.size(); ++i)
      if (t.edges[i] == t.edges[i - 1]) throw std::invalid_argument("duplicate edge");
    // connectivity
    auto adj = t.adjacency();
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
    }
    if (count != n) throw std::invalid_argument("tree not connected");
    return t;
  }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    return adj;
  }
};

using Perm = std::vector<int>;  // vertex permutation, image[i] = where i goes

inline Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

inline Perm perm_compose(const Perm& f, const Perm& g) {  // apply g first
  Perm r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
  return r;
}

inline Perm perm_inverse(const Perm& f) {
  Perm r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[f[i]] = static_cast<int>(i);
  return r;
}

inline bool is_tree_automorphism(const Tree& t, const Perm& p) {
  if (static_cast<int>(p.size()) != t.n) return false;
  std::set<std::pair<int, int>> edge_set(t.edges.begin(), t.edges.end());
  for (auto [u, v] : t.edges) {
    int a = p[u], b = p[v];
    if (!edge_set.count({std::min(a, b), std::max(a, b)})) return false;
  }
  return true;
}

// Complete automorphism group by backtracking over adjacency-consistent
// assignments in BFS order.
inline std::vector<Perm> automorphism_group(const Tree& t) {
  if (t.n > 10) throw std::invalid_argument("automorphism enumeration capped at 10 vertices");
  auto adj = t.adjacency();
  std::vector<int> degree(t.n);
  for (int v = 0; v < t.n; ++v) degree[v] = static_cast<int>(adj[v].size());

  // BFS order: every later vertex has an earlier neighbor.
  std::vector<int> order;
  {
    std::vector<bool> seen(t.n, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      order.push_back(v);
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
    }
  }
  std::vector<int> parent(t.n, -1);  // earlier neighbor in BFS order
  {
    std::vector<int> pos(t.n);
    for (int i = 0; i < t.n; ++i) pos[order[i]] = i;
    for (int i = 1; i < t.n; ++i) {
      int v = order[i];
      for (int w : adj[v])
        if (pos[w] < i) {
          parent[v] = w;
          break;
        }
    }
  }

  std::vector<Perm> group;
  Perm map(t.n, -1);
  std::vector<bool> used(t.n, false);

  auto consistent = [&](int v, int image) {
    if (degree[v] != degree[image]) return false;
    // all previously mapped neighbors must map to neighbors of image
    for (int w : adj[v]) {
      if (map[w] == -1) continue;
      bool ok = false;
      for (int x : adj[image])
        if (x == map[w]) ok = true;
      if (!ok) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == order.size()) {
      group.push_back(map);
      return;
    }
    int v = order[depth];
    if (parent[v] == -1) {
      for (int image = 0; image < t.n; ++image) {
        if (used[image] || !consistent(v, image)) continue;
        map[v] = image;
        used[image] = true;
        rec(depth + 1);
        used[image] = false;
        map[v] = -1;
      }
    } else {
      for (int image : adj[map[parent[v]]]) {
        if (used[image] || !consistent(v, image)) continue;
        map[v] = image;
        used[image] = true;
        rec(depth + 1);
        used[image] = false;
        map[v] = -1;
      }
    }
  };
  rec(0);
  std::sort(group.begin(), group.end());
  return group;
}

// ---------------------------------------------------------------------------
// Fixed sets

struct TreeFixedSet {
  std::vector<int> fixed_vertices;
  std::vector<std::pair<int, int>> inverted_edges;  // stabilized, swapped by some element

  bool empty() const { return fixed_vertices.empty() && inverted_edges.empty(); }
};

// Fixed data of the subgroup generated by `gens`. A vertex is fixed by the
// subgroup iff fixed by every generator; an edge is stabilized iff stabilized
// by every generator, and inverted iff additionally some generator swaps it —
// all three conditions are closed under products and inverses, so the
// generators already determine the subgroup's fixed set.
inline TreeFixedSet fixed_set_tree(const Tree& t, const std::vector<Perm>& gens) {
  for (const Perm& g : gens)
    if (!is_tree_automorphism(t, g))
      throw std::invalid_argument("generator is not an automorphism of the tree");
  TreeFixedSet out;
  for (int v = 0; v < t.n; ++v) {
    bool fixed = true;
    for (const Perm& g : gens)
      if (g[v] != v) fixed = false;
    if (fixed) out.fixed_vertices.push_back(v);
  }
  for (auto [u, v] : t.edges) {
    bool stabilized = true, swapped = false;
    for (const Perm& g : gens) {
      if (g[u] == u && g[v] == v) continue;
      if (g[u] == v && g[v] == u) {
        swapped = true;
        continue;
      }
      stabilized = false;
      break;
    }
    if (stabilized && swapped) out.inverted_edges.emplace_back(u, v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subtrees and the Helly property (Helly number 2)

using VMask = std::uint32_t;

inline bool connected_in_tree(const Tree& t, VMask mask) {
  if (mask == 0) return false;
  int start = 0;
  while (!(mask & (VMask{1} << start))) ++start;
  auto adj = t.adjacency();
  VMask seen = VMask{1} << start;
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      VMask bit = VMask{1} << w;
      if ((mask & bit) && !(seen & bit)) {
        seen |= bit;
        stack.push_back(w);
      }
    }
  }
  return seen == mask;
}

struct SubtreeHellyResult {
  enum class Status { CommonVertex, HypothesisFails, Violation };
  Status status = Status::Violation;
  int common_vertex = -1;
  std::pair<int, int> disjoint_pair{-1, -1};  // indices into the family
};

// If all pairs of subtrees intersect, produces a vertex common to the whole
// family; otherwise points at a disjoint pair. The Violation status would
// witness a failure of the Helly property for subtrees and is never expected.
inline SubtreeHellyResult subtree_helly(const Tree& t, const std::vector<VMask>& subtrees) {
  for (VMask s : subtrees)
    if (!connected_in_tree(t, s))
      throw std::invalid_argument("family member does not induce a subtree");
  SubtreeHellyResult res;
  for (std::size_t i = 0; i < subtrees.size(); ++i)
    for (std::size_t j = i + 1; j < subtrees.size(); ++j)
      if ((subtrees[i] & subtrees[j]) == 0) {
        res.status = SubtreeHellyResult::Status::HypothesisFails;
        res.disjoint_pair = {static_cast<int>(i), static_cast<int>(j)};
        return res;
      }
  VMask total = subtrees.empty() ? 0 : ~VMask{0};
  for (VMask s : subtrees) total &= s;
  total &= (VMask{1} << t.n) - 1;
  if (total == 0 && !subtrees.empty()) {
    res.status = SubtreeHellyResult::Status::Violation;
    return res;
  }
  res.status = SubtreeHellyResult::Status::CommonVertex;
  res.common_vertex = 0;
  while (!(total & (VMask{1} << res.common_vertex))) ++res.common_vertex;
  return res;
}

inline std::vector<VMask> all_subtree_masks(const Tree& t) {
  std::vector<VMask> out;
  for (VMask m = 1; m < (VMask{1} << t.n); ++m)
    if (connected_in_tree(t, m)) out.push_back(m);
  return out;
}

// ---------------------------------------------------------------------------
// Barycentric subdivision view: points are the n vertices followed by the
// n-1 edge midpoints. Fixed-point sets of automorphism sets are subtrees here.

struct Subdivision {
  Tree original;
  Tree divided;  // 2n-1 vertices

  explicit Subdivision(const Tree& t) : original(t), divided(build(t)) {}

  static Tree build(const Tree& t) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
      int mid = t.n + static_cast<int>(e);
      edges.emplace_back(t.edges[e].first, mid);
      edges.emplace_back(t.edges[e].second, mid);
    }
    return Tree::from_edges(2 * t.n - 1, std::move(edges));
  }

  // Mask of subdivision points fixed by every generator: vertices fixed by
  // all, midpoints of edges stabilized by all (pointwise or inverted).
  VMask fixed_mask(const std::vector<Perm>& gens) const {
    VMask mask = 0;
    for (int v = 0; v < original.n; ++v) {
      bool fixed = true;
      for (const Perm& g : gens)
        if (g[v] != v) fixed = false;
      if (fixed) mask |= VMask{1} << v;
    }
    for (std::size_t e = 0; e < original.edges.size(); ++e) {
      auto [u, v] = original.edges[e];
      bool stabilized = true;
      for (const Perm& g : gens) {
        bool keeps = g[u] == u && g[v] == v;
        bool swaps = g[u] == v && g[v] == u;
        if (!keeps && !swaps) {
          stabilized = false;
          break;
        }
      }
      if (stabilized) mask |= VMask{1} << (original.n + static_cast<int>(e));
    }
    return mask;
  }
};

// ---------------------------------------------------------------------------
// Enumeration of trees up to isomorphism: grow by one leaf at a time and
// deduplicate by canonical code.

namespace detail {

inline std::string rooted_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> child;
  for (int w : adj[v])
    if (w != parent) child.push_back(rooted_code(adj, w, v));
  std::sort(child.begin(), child.end());
  std::string s = "(";
  for (const std::string& c : child) s += c;
  return s + ")";
}

inline std::vector<int> tree_centers(const Tree& t) {
  if (t.n == 1) return {0};
  auto adj = t.adjacency();
  std::vector<int> degree(t.n);
  std::vector<int> layer;
  for (int v = 0; v < t.n; ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    if (degree[v] == 1) layer.push_back(v);
  }
  int remaining = t.n;
  std::vector<int> current = layer;
  while (remaining > 2) {
    std::vector<int> next;
    remaining -= static_cast<int>(current.size());
    for (int v : current)
      for (int w : adj[v])
        if (--degree[w] == 1) next.push_back(w);
    current = std::move(next);
  }
  return current;
}

}  // namespace detail

inline std::string canonical_code(const Tree& t) {
  auto adj = t.adjacency();
  std::string best;
  for (int c : detail::tree_centers(t)) {
    std::string code = detail::rooted_code(adj, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

// All trees with exactly n vertices, one representative per isomorphism class.
inline std::vector<Tree> all_trees(int n) {
  if (n < 1) throw std::invalid_argument("n >= 1");
  std::vector<Tree> level{Tree::from_edges(1, {})};
  for (int size = 2; size <= n; ++size) {
    std::vector<Tree> next;
    std::set<std::string> seen;
    for (const Tree& t : level) {
      for (int attach = 0; attach < t.n; ++attach) {
        auto edges = t.edges;
        edges.emplace_back(attach, t.n);
        Tree grown = Tree::from_edges(t.n + 1, std::move(edges));
        if (seen.insert(canonical_code(grown)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return level;
}

// ---------------------------------------------------------------------------
// Complete subgroup enumeration for small permutation groups.

class SmallGroup {
 public:
  explicit SmallGroup(const std::vector<Perm>& elements) {
    elems_ = elements;
    std::sort(elems_.begin(), elems_.end());
    for (std::size_t i = 0; i < elems_.size(); ++i) index_[key(elems_[i])] = i;
    const std::size_t m = elems_.size();
    table_.assign(m * m, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        auto it = index_.find(key(perm_compose(elems_[i], elems_[j])));
        if (it == index_.end()) throw std::invalid_argument("element set not closed");
        table_[i * m + j] = static_cast<std::uint16_t>(it->second);
      }
    id_ = static_cast<std::uint16_t>(index_.at(key(perm_identity(
        elems_.empty() ? 1 : static_cast<int>(elems_.front().size())))));
  }

  std::size_t order() const { return elems_.size(); }
  std::uint16_t identity_index() const { return id_; }
  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
    return table_[static_cast<std::size_t>(a) * elems_.size() + b];
  }
  const Perm& element(std::uint16_t i) const { return elems_[i]; }

  std::vector<std::uint16_t> closure(std::vector<std::uint16_t> gens) const {
    std::vector<bool> in(elems_.size(), false);
    std::vector<std::uint16_t> members{id_};
    in[id_] = true;
    for (std::uint16_t g : gens)
      if (!in[g]) {
        in[g] = true;
        members.push_back(g);
      }
    for (std::size_t head = 0; head < members.size(); ++head)
      for (std::uint16_t g : gens) {
        std::uint16_t p = mul(members[head], g);
        if (!in[p]) {
          in[p] = true;
          members.push_back(p);
        }
      }
    std::sort(members.begin(), members.end());
    return members;
  }

 private:
  static std::string key(const Perm& p) {
    std::string s;
    for (int v : p) s += static_cast<char>('0' + v);
    return s;
  }

  std::vector<Perm> elems_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::uint16_t> table_;
  std::uint16_t id_ = 0;
};

// Every subgroup as a sorted element-id list. Breadth-first over one-element
// extensions: each subgroup of a finite group is reached by a chain of
// single-generator additions, and extension candidates only need one
// representative per coset.
inline std::vector<std::vector<std::uint16_t>> all_subgroups(const SmallGroup& g) {
  struct Rec {
    std::vector<std::uint16_t> members;
    std::vector<std::uint16_t> gens;
  };
  auto key_of = [](const std::vector<std::uint16_t>& v) {
    std::string s;
    s.reserve(v.size() * 2);
    for (std::uint16_t x : v) {
      s += static_cast<char>(x & 0xff);
      s += static_cast<char>(x >> 8);
    }
    return s;
  };

  std::unordered_set<std::string> seen;
  std::vector<Rec> queue;
  std::vector<std::vector<std::uint16_t>> out;

  Rec trivial{{g.identity_index()}, {}};
  seen.insert(key_of(trivial.members));
  queue.push_back(trivial);
  out.push_back(trivial.members);

  for (std::size_t head = 0; head < queue.size(); ++head) {
    Rec h = queue[head];
    std::vector<bool> covered(g.order(), false);
    for (std::uint16_t m : h.members) covered[m] = true;
    for (std::uint16_t cand = 0; cand < g.order(); ++cand) {
      if (covered[cand]) continue;
      // mark the whole coset H*cand: <H, x> is the same for every x in it
      for (std::uint16_t m : h.members) covered[g.mul(m, cand)] = true;
      std::vector<std::uint16_t> gens = h.gens;
      gens.push_back(cand);
      std::vector<std::uint16_t> closure = g.closure(gens);
      std::string k = key_of(closure);
      if (seen.insert(k).second) {
        out.push_back(closure);
        queue.push_back(Rec{closure, gens});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps

// Above this order, per-subgroup checks switch from the full subgroup lattice
// to all cyclic subgroups plus the whole group. The whole-group check already
// decides the universal statement: the fixed set of a subgroup contains the
// fixed set of the full group, being an intersection over fewer elements.
constexpr std::size_t kSubgroupEnumLimit = 1200;

struct TreeSweepStats {
  std::uint64_t trees = 0;
  std::uint64_t subgroups = 0;  // subgroups whose fixed set was checked directly
  std::uint64_t failures = 0;
  std::uint64_t lattice_complete_trees = 0;  // trees with the full lattice enumerated
};

inline TreeSweepStats tree_exhaustive(int max_vertices) {
  if (max_vertices < 1 || max_vertices > 9)
    throw std::invalid_argument("tree sweep capped at 9 vertices");
  TreeSweepStats stats;
  for (int n = 1; n <= max_vertices; ++n) {
    for (const Tree& t : all_trees(n)) {
      ++stats.trees;
      std::vector<Perm> group = automorphism_group(t);

      // Whole group first: its fixed set is contained in every subgroup's.
      TreeFixedSet whole = fixed_set_tree(t, group);
      ++stats.subgroups;
      if (whole.empty()) ++stats.failures;

      if (group.size() <= kSubgroupEnumLimit) {
        SmallGroup sg(group);
        auto subs = all_subgroups(sg);
        ++stats.lattice_complete_trees;
        for (const auto& member_ids : subs) {
          if (member_ids.size() == sg.order()) continue;  // already checked
          std::vector<Perm> members;
          members.reserve(member_ids.size());
          for (std::uint16_t id : member_ids) members.push_back(sg.element(id));
          ++stats.subgroups;
          if (fixed_set_tree(t, members).empty()) ++stats.failures;
        }
      } else {
        // Large symmetric stars: check every cyclic subgroup directly; all
        // remaining subgroups inherit the whole-group fixed point.
        std::set<std::vector<Perm>> cyclic;
        for (const Perm& g : group) {
          std::vector<Perm> sub{perm_identity(t.n)};
          Perm p = g;
          while (!(p == perm_identity(t.n))) {
            sub.push_back(p);
            p = perm_compose(p, g);
          }
          std::sort(sub.begin(), sub.end());
          cyclic.insert(std::move(sub));
        }
        for (const auto& sub : cyclic) {
          ++stats.subgroups;
          if (fixed_set_tree(t, sub).empty()) ++stats.failures;
        }
      }
    }
  }
  return stats;
}

struct SubtreeSweepStats {
  std::uint64_t trees = 0;
  std::uint64_t families = 0;
  std::uint64_t failures = 0;
};

// Every family of at most `max_family` pairwise-intersecting subtrees must
// have a common vertex; exhaustive over all trees with <= max_vertices.
inline SubtreeSweepStats subtree_helly_exhaustive(int max_vertices, int max_family = 4) {
  SubtreeSweepStats stats;
  for (int n = 1; n <= max_vertices; ++n) {
    for (const Tree& t : all_trees(n)) {
      ++stats.trees;
      std::vector<VMask> subtrees = all_subtree_masks(t);
      const std::size_t m = subtrees.size();
      // families of size 2..max_family
      std::vector<std::size_t> idx;
      std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
        if (idx.size() >= 2) {
          bool pairwise = true;
          VMask total = ~VMask{0};
          for (std::size_t i = 0; i < idx.size() && pairwise; ++i) {
            total &= subtrees[idx[i]];
            for (std::size_t j = i + 1; j < idx.size(); ++j)
              if ((subtrees[idx[i]] & subtrees[idx[j]]) == 0) pairwise = false;
          }
          if (pairwise) {
            ++stats.families;
            if ((total & ((VMask{1} << t.n) - 1)) == 0) ++stats.failures;
          }
        }
        if (remaining == 0) return;
        for (std::size_t k = start; k < m; ++k) {
          idx.push_back(k);
          rec(k + 1, remaining - 1);
          idx.pop_back();
        }
      };
      rec(0, max_family);
    }
  }
  return stats;
}

struct TriangleStats {
  std::uint64_t trees = 0;
  std::uint64_t partitions = 0;
  std::uint64_t failures = 0;
};

// Triangle criterion at desk scale: split the generating set of the full
// automorphism group into A1, A2, A3; the three pairwise subgroups have
// nonempty fixed subtrees in the subdivision, those subtrees pairwise
// intersect, and the Helly property for subtrees forces a global fixed point,
// which must agree with the directly computed one.
inline TriangleStats triangle_criterion_sweep(int max_vertices, int partitions_per_tree,
                                              std::uint64_t seed) {
  TriangleStats stats;
  SplitMix64 root(seed);
  for (int n = 1; n <= max_vertices; ++n) {
    for (const Tree& t : all_trees(n)) {
      ++stats.trees;
      std::vector<Perm> group = automorphism_group(t);
      Subdivision sub(t);
      VMask whole = sub.fixed_mask(group);
      for (int rep = 0; rep < partitions_per_tree; ++rep) {
        ++stats.partitions;
        SplitMix64 rng = root.fork(stats.partitions);
        std::vector<Perm> part[3];
        for (const Perm& g : group) part[rng.below(3)].push_back(g);
        std::vector<Perm> pair_gens[3];
        int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
        VMask fixed[3];
        bool ok = true;
        for (int k = 0; k < 3; ++k) {
          pair_gens[k] = part[pairs[k][0]];
          for (const Perm& g : part[pairs[k][1]]) pair_gens[k].push_back(g);
          fixed[k] = sub.fixed_mask(pair_gens[k]);
          if (fixed[k] == 0) ok = false;  // finite groups on trees always fix a point
        }
        // pairwise intersections contain the full fixed set, hence nonempty
        for (int a = 0; a < 3 && ok; ++a)
          for (int b = a + 1; b < 3 && ok; ++b)
            if ((fixed[a] & fixed[b]) == 0) ok = false;
        if (ok) {
          std::vector<VMask> family{fixed[0], fixed[1], fixed[2]};
          SubtreeHellyResult hr = subtree_helly(sub.divided, family);
          ok = hr.status == SubtreeHellyResult::Status::CommonVertex &&
               (fixed[0] & fixed[1] & fixed[2]) == whole && whole != 0;
        }
        if (!ok) ++stats.failures;
      }
    }
  }
  return stats;
}

}  // namespace certify::tree
