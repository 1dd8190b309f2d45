#pragma once

// Coxeter presentations: matrices, graphs, Schlafli matrices, recognition of
// the finite types, a principal-minor positivity cross-check, and sphericity
// levels (largest k such that every k+1 generators span a finite parabolic).

#include "certify/quad_field.hpp"
#include "certify/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace certify::cox {

// Entry 0 encodes the infinite label in memory and in every file format,
// keeping matrices integer-valued.
constexpr int kInfinity = 0;

class CoxeterMatrix {
 public:
  static CoxeterMatrix from_entries(const std::vector<std::vector<int>>& rows) {
    const int rank = static_cast<int>(rows.size());
    if (rank < 1) throw std::invalid_argument("coxeter matrix: empty");
    CoxeterMatrix m;
    m.rank_ = rank;
    m.e_.assign(static_cast<std::size_t>(rank) * rank, 1);
    for (int i = 0; i < rank; ++i) {
      if (static_cast<int>(rows[i].size()) != rank)
        throw std::invalid_argument("coxeter matrix: not square");
      for (int j = 0; j < rank; ++j) {
        int v = rows[i][j];
        if (i == j) {
          // Some sources write the diagonal as 2; both describe the same
          // group, so accept and normalize, but keep a note for reports.
          if (v == 2) {
            v = 1;
            if (m.warnings_.empty())
              m.warnings_.push_back("diagonal entries 2 normalized to 1");
          }
          if (v != 1) throw std::invalid_argument("coxeter matrix: diagonal must be 1");
        } else {
          if (v != kInfinity && v < 2)
            throw std::invalid_argument("coxeter matrix: off-diagonal must be >=2 or 0");
          if (rows[j][i] != rows[i][j])
            throw std::invalid_argument("coxeter matrix: not symmetric");
        }
        m.e_[static_cast<std::size_t>(i) * rank + j] = v;
      }
    }
    return m;
  }

  int rank() const { return rank_; }
  int at(int i, int j) const { return e_[static_cast<std::size_t>(i) * rank_ + j]; }
  bool is_infinite_entry(int i, int j) const { return at(i, j) == kInfinity; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  CoxeterMatrix principal_submatrix(const std::vector<int>& keep) const {
    std::vector<std::vector<int>> rows(keep.size(), std::vector<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j) rows[i][j] = at(keep[i], keep[j]);
    return from_entries(rows);
  }

  CoxeterMatrix permuted(const std::vector<int>& perm) const {
    std::vector<std::vector<int>> rows(rank_, std::vector<int>(rank_));
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) rows[i][j] = at(perm[i], perm[j]);
    return from_entries(rows);
  }

  std::string key() const {
    std::string s = std::to_string(rank_) + ":";
    for (int v : e_) s += std::to_string(v) + ",";
    return s;
  }

  // Lexicographically minimal key over simultaneous row/column permutations.
  // Only sensible at small rank; used to sweep matrices up to symmetry.
  std::string canonical_key() const {
    std::vector<int> perm(rank_);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
      std::string k = permuted(perm).key();
      if (best.empty() || k < best) best = k;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

 private:
  int rank_ = 0;
  std::vector<int> e_;
  std::vector<std::string> warnings_;
};

struct CoxeterGraph {
  struct Edge {
    int i, j;
    int label;  // recorded even when 3; 0 means the infinite label
  };
  int rank = 0;
  std::vector<Edge> edges;

  static CoxeterGraph from_matrix(const CoxeterMatrix& m) {
    CoxeterGraph g;
    g.rank = m.rank();
    for (int i = 0; i < g.rank; ++i)
      for (int j = i + 1; j < g.rank; ++j) {
        int v = m.at(i, j);
        if (v == kInfinity || v >= 3) g.edges.push_back({i, j, v});
      }
    return g;
  }

  std::vector<std::vector<int>> components() const {
    std::vector<int> comp(rank, -1);
    int next = 0;
    for (int s = 0; s < rank; ++s) {
      if (comp[s] != -1) continue;
      comp[s] = next;
      std::vector<int> stack{s};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Edge& e : edges) {
          int other = -1;
          if (e.i == v) other = e.j;
          if (e.j == v) other = e.i;
          if (other >= 0 && comp[other] == -1) {
            comp[other] = next;
            stack.push_back(other);
          }
        }
      }
      ++next;
    }
    std::vector<std::vector<int>> out(next);
    for (int v = 0; v < rank; ++v) out[comp[v]].push_back(v);
    return out;
  }
};

struct ComponentClass {
  std::vector<int> vertices;
  std::string label;  // "A3", "B4", "D5", "E6".."E8", "F4", "H3", "H4", "I2(p)", "Infinite"
  bool finite = false;
};

struct ClassificationResult {
  std::vector<ComponentClass> components;
  bool finite = false;  // overall: finite iff every component is

  std::string summary() const {
    std::string s;
    for (const auto& c : components) {
      if (!s.empty()) s += " x ";
      s += c.label;
    }
    return s.empty() ? "trivial" : s;
  }
};

namespace detail {

// Classifies one connected component of the Coxeter graph against the
// finite-type catalog: A_n, B_n, D_n, E6, E7, E8, F4, H3, H4, I2(p).
inline ComponentClass classify_component(const CoxeterMatrix& m,
                                         const std::vector<int>& verts) {
  ComponentClass out;
  out.vertices = verts;
  const int n = static_cast<int>(verts.size());
  auto infinite = [&out]() {
    out.label = "Infinite";
    out.finite = false;
    return out;
  };

  if (n == 1) {
    out.label = "A1";
    out.finite = true;
    return out;
  }

  // Local adjacency among the component's vertices.
  std::vector<std::vector<int>> adj(n);
  int edge_count = 0;
  std::vector<std::vector<int>> label(n, std::vector<int>(n, 2));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int v = m.at(verts[a], verts[b]);
      label[a][b] = label[b][a] = v;
      if (v == kInfinity) return infinite();  // no finite diagram has this label
      if (v >= 3) {
        adj[a].push_back(b);
        adj[b].push_back(a);
        ++edge_count;
      }
    }

  if (edge_count != n - 1) return infinite();  // connected with a cycle

  int branch = -1;
  for (int a = 0; a < n; ++a) {
    if (adj[a].size() >= 4) return infinite();
    if (adj[a].size() == 3) {
      if (branch != -1) return infinite();
      branch = a;
    }
  }

  if (branch >= 0) {
    // Branched tree: all labels must be 3, arms must match D/E shapes.
    for (int a = 0; a < n; ++a)
      for (int b : adj[a])
        if (label[a][b] != 3) return infinite();
    std::vector<int> arms;
    for (int start : adj[branch]) {
      int len = 1, prev = branch, cur = start;
      while (true) {
        int next = -1;
        for (int nb : adj[cur])
          if (nb != prev) next = nb;
        if (next == -1) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    out.finite = true;
    if (arms[0] == 1 && arms[1] == 1) {
      out.label = "D" + std::to_string(n);
      return out;
    }
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
      out.label = "E" + std::to_string(n);
      return out;
    }
    return infinite();
  }

  // Path: walk from an endpoint and collect the label sequence.
  int end = -1;
  for (int a = 0; a < n; ++a)
    if (adj[a].size() == 1) end = a;
  if (end == -1) return infinite();
  std::vector<int> seq;
  {
    int prev = -1, cur = end;
    while (static_cast<int>(seq.size()) < n - 1) {
      int next = -1;
      for (int nb : adj[cur])
        if (nb != prev) next = nb;
      seq.push_back(label[cur][next]);
      prev = cur;
      cur = next;
    }
  }
  {
    std::vector<int> rev(seq.rbegin(), seq.rend());
    if (rev < seq) seq = rev;
  }

  int big = 0;
  for (int v : seq)
    if (v >= 4) ++big;

  out.finite = true;
  if (big == 0) {
    out.label = "A" + std::to_string(n);
    return out;
  }
  if (n == 2) {
    int p = seq[0];
    out.label = p == 4 ? "B2" : "I2(" + std::to_string(p) + ")";
    return out;
  }
  if (big >= 2) return infinite();
  // Exactly one label >= 4 on a path of length >= 3.
  std::size_t pos = 0;
  while (seq[pos] < 4) ++pos;
  const int v = seq[pos];
  const bool at_end = pos == 0 || pos + 1 == seq.size();
  if (v == 4 && at_end) {
    out.label = "B" + std::to_string(n);
    return out;
  }
  if (v == 4 && n == 4 && pos == 1) {
    out.label = "F4";
    return out;
  }
  if (v == 5 && at_end && n == 3) {
    out.label = "H3";
    return out;
  }
  if (v == 5 && at_end && n == 4) {
    out.label = "H4";
    return out;
  }
  return infinite();
}

}  // namespace detail

inline ClassificationResult classify(const CoxeterMatrix& m) {
  ClassificationResult res;
  res.finite = true;
  for (const auto& comp : CoxeterGraph::from_matrix(m).components()) {
    res.components.push_back(detail::classify_component(m, comp));
    res.finite = res.finite && res.components.back().finite;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Schlafli matrix

struct SchlafliMatrix {
  int rank = 0;
  std::vector<double> approx;      // row-major, -cos(pi/m_ij)
  std::vector<QuadF> exact;        // exact value where the label permits
  std::vector<bool> exact_mask;    // per entry: label in {1,2,3,4,6,infinity}
  bool exact_available = false;    // every entry is exact

  double at(int i, int j) const { return approx[static_cast<std::size_t>(i) * rank + j]; }
  const QuadF& exact_at(int i, int j) const {
    return exact[static_cast<std::size_t>(i) * rank + j];
  }
  bool exact_entry(int i, int j) const {
    return exact_mask[static_cast<std::size_t>(i) * rank + j];
  }
  // the leading k x k block is entirely exact
  bool leading_block_exact(int k) const {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (!exact_entry(i, j)) return false;
    return true;
  }
};

inline std::optional<QuadF> exact_cos_entry(int label) {
  switch (label) {
    case kInfinity:
      return QuadF::rational(-1);
    case 1:
      return QuadF::rational(1);  // -cos(pi) = 1
    case 2:
      return QuadF::rational(0);
    case 3:
      return QuadF::rational(-1, 2);
    case 4: {
      QuadF v = QuadF::sqrt2();
      return QuadF(Rat(0), -v.b / 2, Rat(0), Rat(0));  // -sqrt2/2
    }
    case 6:
      return QuadF(Rat(0), Rat(0), Rat(-1, 2), Rat(0));  // -sqrt3/2
    default:
      return std::nullopt;
  }
}

inline SchlafliMatrix schlafli_matrix(const CoxeterMatrix& m) {
  SchlafliMatrix s;
  s.rank = m.rank();
  s.approx.resize(static_cast<std::size_t>(s.rank) * s.rank);
  s.exact.assign(static_cast<std::size_t>(s.rank) * s.rank, QuadF());
  s.exact_mask.assign(static_cast<std::size_t>(s.rank) * s.rank, false);
  s.exact_available = true;
  for (int i = 0; i < s.rank; ++i)
    for (int j = 0; j < s.rank; ++j) {
      int label = m.at(i, j);
      double v = label == kInfinity ? -1.0 : -std::cos(M_PI / label);
      s.approx[static_cast<std::size_t>(i) * s.rank + j] = v;
      auto e = exact_cos_entry(label);
      if (e) {
        s.exact[static_cast<std::size_t>(i) * s.rank + j] = *e;
        s.exact_mask[static_cast<std::size_t>(i) * s.rank + j] = true;
      } else {
        s.exact_available = false;
      }
    }
  return s;
}

// ---------------------------------------------------------------------------
// Principal-minor positivity oracle

enum class Definiteness { PositiveDefinite, NotPositiveDefinite, Indeterminate };

struct OracleResult {
  Definiteness verdict = Definiteness::Indeterminate;
  int decisive_minor = 0;   // 1-based order of the minor that decided, 0 if none
  bool used_exact = false;  // a near-zero minor was resolved exactly
};

inline double leading_minor_double(const SchlafliMatrix& s, int k) {
  std::vector<double> a(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a[static_cast<std::size_t>(i) * k + j] = s.at(i, j);
  double det = 1.0;
  for (int col = 0; col < k; ++col) {
    int piv = col;
    for (int r = col + 1; r < k; ++r)
      if (std::fabs(a[static_cast<std::size_t>(r) * k + col]) >
          std::fabs(a[static_cast<std::size_t>(piv) * k + col]))
        piv = r;
    if (a[static_cast<std::size_t>(piv) * k + col] == 0.0) return 0.0;
    if (piv != col) {
      for (int c = 0; c < k; ++c)
        std::swap(a[static_cast<std::size_t>(piv) * k + c],
                  a[static_cast<std::size_t>(col) * k + c]);
      det = -det;
    }
    double p = a[static_cast<std::size_t>(col) * k + col];
    det *= p;
    for (int r = col + 1; r < k; ++r) {
      double f = a[static_cast<std::size_t>(r) * k + col] / p;
      for (int c = col; c < k; ++c)
        a[static_cast<std::size_t>(r) * k + c] -= f * a[static_cast<std::size_t>(col) * k + c];
    }
  }
  return det;
}

inline QuadF leading_minor_exact(const SchlafliMatrix& s, int k) {
  std::vector<std::vector<QuadF>> a(k, std::vector<QuadF>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a[i][j] = s.exact_at(i, j);
  return quad_det(a);
}

// Positive-definite iff every leading principal minor clears +tol; a minor
// inside [-tol, +tol] is resolved exactly when the labels inside its block
// permit, and the verdict is Indeterminate otherwise.
inline OracleResult numeric_finiteness_oracle(const CoxeterMatrix& m, double tol = 1e-9) {
  SchlafliMatrix s = schlafli_matrix(m);
  OracleResult res;
  for (int k = 1; k <= s.rank; ++k) {
    double d = leading_minor_double(s, k);
    if (d > tol) continue;
    if (d < -tol) {
      res.verdict = Definiteness::NotPositiveDefinite;
      res.decisive_minor = k;
      return res;
    }
    if (!s.leading_block_exact(k)) {
      res.verdict = Definiteness::Indeterminate;
      res.decisive_minor = k;
      return res;
    }
    res.used_exact = true;
    if (leading_minor_exact(s, k).sign() <= 0) {
      res.verdict = Definiteness::NotPositiveDefinite;
      res.decisive_minor = k;
      return res;
    }
  }
  res.verdict = Definiteness::PositiveDefinite;
  return res;
}

// ---------------------------------------------------------------------------
// Sphericity

// Exhaustive subset enumeration is instant up to this rank and the
// constructions this toolkit checks never need more.
constexpr int kSphericityRankCap = 12;

struct Sphericity {
  bool full_rank = false;  // the whole group is finite
  int level = 0;           // largest k: every (k+1)-subset spans a finite parabolic
};

inline Sphericity sphericity(const CoxeterMatrix& m) {
  if (m.rank() > kSphericityRankCap)
    throw std::invalid_argument("sphericity: rank above enumeration cap");
  const int rank = m.rank();
  auto all_finite_at = [&](int size) {
    std::vector<int> idx(size);
    // enumerate size-subsets of {0..rank-1}
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      if (!classify(m.principal_submatrix(idx)).finite) return false;
      int pos = size - 1;
      while (pos >= 0 && idx[pos] == rank - size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
    return true;
  };
  // Parabolic subgroups of finite Coxeter groups are finite, so feasibility
  // is monotone in the subset size; scan from the top.
  for (int s = rank; s >= 1; --s) {
    if (all_finite_at(s)) return {s == rank, s - 1};
  }
  return {false, 0};  // unreachable: singletons are always finite
}

// ---------------------------------------------------------------------------
// Matrices the built-in claims use repeatedly.

// Rank n+1 path with end edges labeled 4 and all non-adjacent labels 2:
// m_12 = 4, m_{i,i+1} = 3 for 2 <= i <= n-1, m_{n,n+1} = 4. The source
// presentation writes the diagonal as 2; the validator normalizes it.
inline CoxeterMatrix signed_permutation_path_matrix(int n) {
  if (n < 2) throw std::invalid_argument("path matrix needs n >= 2");
  const int rank = n + 1;
  std::vector<std::vector<int>> rows(rank, std::vector<int>(rank, 2));
  for (int i = 0; i + 1 < rank; ++i) rows[i][i + 1] = rows[i + 1][i] = 3;
  rows[0][1] = rows[1][0] = 4;
  rows[rank - 2][rank - 1] = rows[rank - 1][rank - 2] = 4;
  return CoxeterMatrix::from_entries(rows);
}

// Unlabeled cycle on k >= 3 vertices; every proper subset induces A-type paths.
inline CoxeterMatrix cycle_matrix(int k) {
  if (k < 3) throw std::invalid_argument("cycle needs k >= 3");
  std::vector<std::vector<int>> rows(k, std::vector<int>(k, 2));
  for (int i = 0; i < k; ++i) rows[i][i] = 1;
  for (int i = 0; i < k; ++i) {
    int j = (i + 1) % k;
    rows[i][j] = rows[j][i] = 3;
  }
  return CoxeterMatrix::from_entries(rows);
}

// A_n / B_n sample matrices for the closure-order pins.
inline CoxeterMatrix type_a_matrix(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) rows[i][i] = 1;
  for (int i = 0; i + 1 < n; ++i) rows[i][i + 1] = rows[i + 1][i] = 3;
  return CoxeterMatrix::from_entries(rows);
}

inline CoxeterMatrix type_b_matrix(int n) {
  if (n < 2) throw std::invalid_argument("B_n needs n >= 2");
  auto rows = std::vector<std::vector<int>>(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) rows[i][i] = 1;
  for (int i = 0; i + 1 < n; ++i) rows[i][i + 1] = rows[i + 1][i] = 3;
  rows[n - 2][n - 1] = rows[n - 1][n - 2] = 4;
  return CoxeterMatrix::from_entries(rows);
}

}  // namespace certify::cox
