#pragma once

// Desk-scale H-polytopes over the rationals with an exact feasibility test
// by successive variable elimination. No floating point: emptiness verdicts
// and witness points are exact, so there are no tolerance disputes.

#include "certify/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace certify::geo {

using Point = std::vector<Rat>;

struct Halfspace {
  Point a;  // nonzero normal
  Rat b;    // { x : a.x <= b }

  Halfspace(Point a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {
    // canonicalize up front: gmp equality assumes reduced fractions
    bool nz = false;
    for (Rat& c : a) {
      c.canonicalize();
      if (c != 0) nz = true;
    }
    b.canonicalize();
    if (!nz) throw std::invalid_argument("halfspace normal must be nonzero");
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) s += " ";
      s += a[i].get_str() + "*x" + std::to_string(i + 1);
    }
    return s + " <= " + b.get_str();
  }
};

struct Polytope {
  int dim = 0;
  std::vector<Halfspace> halfspaces;

  Polytope(int d, std::vector<Halfspace> hs) : dim(d), halfspaces(std::move(hs)) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    for (const Halfspace& h : halfspaces)
      if (static_cast<int>(h.a.size()) != d)
        throw std::invalid_argument("halfspace dimension mismatch");
  }
};

inline Polytope intersect(const Polytope& p, const Polytope& q) {
  if (p.dim != q.dim) throw std::invalid_argument("dimension mismatch");
  std::vector<Halfspace> hs = p.halfspaces;
  hs.insert(hs.end(), q.halfspaces.begin(), q.halfspaces.end());
  return Polytope(p.dim, std::move(hs));
}

constexpr int kMaxEliminationDim = 4;
constexpr std::size_t kMaxEliminationRows = 64;

namespace detail {

// A row is (c_1, ..., c_k, b) meaning sum c_i x_i <= b.
using Row = std::vector<Rat>;

// Scales a row (c_1..c_k, b) by a positive rational so the coefficient vector
// becomes primitive integer; parallel constraints then share the same normal
// and only the tightest bound needs to be kept.
inline Row normalize_row(Row r) {
  const std::size_t k = r.size() - 1;
  Int lcm = 1;
  for (std::size_t i = 0; i < k; ++i) {
    Int den = r[i].get_den();
    lcm = lcm / gcd(lcm, den) * den;
  }
  Int g = 0;
  for (std::size_t i = 0; i < k; ++i) {
    r[i] *= Rat(lcm);
    r[i].canonicalize();
    g = gcd(g, r[i].get_num());
  }
  if (g < 0) g = -g;
  Rat scale = g == 0 ? Rat(lcm) : Rat(lcm, g);
  scale.canonicalize();
  r.back() *= scale;
  r.back().canonicalize();
  if (g > 1)
    for (std::size_t i = 0; i < k; ++i) {
      r[i] /= Rat(g);
      r[i].canonicalize();
    }
  return r;
}

inline std::string row_key(const Row& r) {
  std::string s;
  for (const Rat& v : r) s += v.get_str() + ",";
  return s;
}

}  // namespace detail

// Exact rational feasibility: returns a point satisfying every constraint, or
// nullopt when the polytope is empty.
inline std::optional<Point> polytope_witness(const Polytope& p) {
  if (p.dim > kMaxEliminationDim)
    throw std::invalid_argument("polytope dimension above desk-scale cap");
  if (p.halfspaces.size() > kMaxEliminationRows)
    throw std::invalid_argument("halfspace count above desk-scale cap");

  using detail::Row;
  // levels[k] holds constraints mentioning only x_1..x_k (k coefficients + bound).
  // Rows with equal normal keep only the tightest bound, which curbs the
  // quadratic growth of elimination on these desk-scale instances.
  std::vector<std::vector<Row>> levels(static_cast<std::size_t>(p.dim) + 1);
  auto compact = [](std::vector<Row>&& raw) {
    std::map<std::string, Row> tight;
    for (Row& r : raw) {
      r = detail::normalize_row(std::move(r));
      Rat bound = r.back();
      Row coeffs(r.begin(), r.end() - 1);
      std::string key = detail::row_key(coeffs);
      auto it = tight.find(key);
      if (it == tight.end())
        tight.emplace(std::move(key), std::move(r));
      else if (bound < it->second.back())
        it->second = std::move(r);
    }
    std::vector<Row> out;
    out.reserve(tight.size());
    for (auto& [key, row] : tight) out.push_back(std::move(row));
    return out;
  };
  {
    std::vector<Row> raw;
    for (const Halfspace& h : p.halfspaces) {
      Row r = h.a;
      r.push_back(h.b);
      raw.push_back(std::move(r));
    }
    levels[p.dim] = compact(std::move(raw));
  }

  for (int k = p.dim; k >= 1; --k) {
    std::vector<Row> lows, highs;  // coefficient of x_k negative / positive
    std::vector<Row> raw;
    for (const Row& r : levels[k]) {
      const Rat& c = r[static_cast<std::size_t>(k) - 1];
      if (c == 0) {
        Row down(r.begin(), r.begin() + (k - 1));
        down.push_back(r.back());
        raw.push_back(std::move(down));
      } else if (c > 0) {
        highs.push_back(r);
      } else {
        lows.push_back(r);
      }
    }
    for (const Row& hi : highs)
      for (const Row& lo : lows) {
        const Rat ph = hi[static_cast<std::size_t>(k) - 1];   // > 0
        const Rat ql = lo[static_cast<std::size_t>(k) - 1];   // < 0
        Row comb(static_cast<std::size_t>(k));                // k-1 coefficients + bound
        for (int j = 0; j < k - 1; ++j)
          comb[j] = ph * lo[j] - ql * hi[j];
        comb[static_cast<std::size_t>(k) - 1] = ph * lo.back() - ql * hi.back();
        raw.push_back(std::move(comb));
      }
    levels[k - 1] = compact(std::move(raw));
  }

  for (const Row& r : levels[0])
    if (r.back() < 0) return std::nullopt;

  // Back-substitute a witness, level by level.
  Point x;
  for (int k = 1; k <= p.dim; ++k) {
    bool has_lo = false, has_hi = false;
    Rat lo(0), hi(0);
    for (const Row& r : levels[k]) {
      const Rat& c = r[static_cast<std::size_t>(k) - 1];
      if (c == 0) continue;
      Rat rest = r.back();
      for (int j = 0; j < k - 1; ++j) rest -= r[j] * x[j];
      Rat bound = rest / c;
      if (c > 0) {
        if (!has_hi || bound < hi) hi = bound;
        has_hi = true;
      } else {
        if (!has_lo || bound > lo) lo = bound;
        has_lo = true;
      }
    }
    if (has_lo && has_hi)
      x.push_back((lo + hi) / 2);
    else if (has_lo)
      x.push_back(lo);
    else if (has_hi)
      x.push_back(hi);
    else
      x.push_back(Rat(0));
  }
  return x;
}

inline bool polytope_empty(const Polytope& p) { return !polytope_witness(p).has_value(); }

inline bool satisfies(const Polytope& p, const Point& x) {
  for (const Halfspace& h : p.halfspaces) {
    Rat lhs(0);
    for (int i = 0; i < p.dim; ++i) lhs += h.a[i] * x[i];
    if (lhs > h.b) return false;
  }
  return true;
}

}  // namespace certify::geo
