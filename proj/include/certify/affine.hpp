#pragma once

// Concrete rational model for Z^n x| ((Z/2)^n x| S_n): signed-permutation
// linear parts with rational translations. Everything here is exact; no
// floating point. An isometry (L, t) acts by x -> Lx + t, and composition
// follows (L,t)(L',t') = (LL', t + Lt').

#include "certify/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace certify::aff {

using Point = std::vector<Rat>;

struct SignedPermutation {
  // (Lx)_i = sign[i] * x[src[i]]   (0-based internally)
  std::vector<int> src;
  std::vector<int> sign;

  static SignedPermutation identity(int n) {
    check_dim(n);
    SignedPermutation p;
    p.src.resize(n);
    p.sign.assign(n, 1);
    for (int i = 0; i < n; ++i) p.src[i] = i;
    return p;
  }

  // Reflection of the i-th coordinate (1-based).
  static SignedPermutation flip(int i, int n) {
    SignedPermutation p = identity(n);
    if (i < 1 || i > n) throw std::invalid_argument("flip index out of range");
    p.sign[i - 1] = -1;
    return p;
  }

  static SignedPermutation transposition(int i, int j, int n) {
    SignedPermutation p = identity(n);
    if (i < 1 || j < 1 || i > n || j > n || i == j)
      throw std::invalid_argument("bad transposition");
    std::swap(p.src[i - 1], p.src[j - 1]);
    return p;
  }

  int dim() const { return static_cast<int>(src.size()); }

  Point apply(const Point& x) const {
    Point y(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) y[i] = sign[i] * x[src[i]];
    return y;
  }

  // (this * o) x = this(o(x))
  SignedPermutation operator*(const SignedPermutation& o) const {
    if (dim() != o.dim()) throw std::invalid_argument("dimension mismatch");
    SignedPermutation r;
    r.src.resize(src.size());
    r.sign.resize(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
      r.src[i] = o.src[src[i]];
      r.sign[i] = sign[i] * o.sign[src[i]];
    }
    return r;
  }

  SignedPermutation inverse() const {
    SignedPermutation r;
    r.src.resize(src.size());
    r.sign.resize(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
      r.src[src[i]] = static_cast<int>(i);
      r.sign[src[i]] = sign[i];
    }
    return r;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < src.size(); ++i)
      if (src[i] != static_cast<int>(i) || sign[i] != 1) return false;
    return true;
  }

  bool operator==(const SignedPermutation& o) const { return src == o.src && sign == o.sign; }

  std::string key() const {
    std::string s;
    for (std::size_t i = 0; i < src.size(); ++i)
      s += std::to_string(sign[i] * (src[i] + 1)) + ",";
    return s;
  }

 private:
  static void check_dim(int n) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  }
};

struct AffineIsometry {
  SignedPermutation lin;
  Point t;

  static AffineIsometry identity(int n) {
    return {SignedPermutation::identity(n), Point(static_cast<std::size_t>(n), Rat(0))};
  }
  static AffineIsometry translation(Point v) {
    AffineIsometry g = identity(static_cast<int>(v.size()));
    // canonicalize up front: gmp equality and key strings assume reduced form
    for (Rat& c : v) c.canonicalize();
    g.t = std::move(v);
    return g;
  }
  static AffineIsometry linear(SignedPermutation l) {
    AffineIsometry g = identity(l.dim());
    g.lin = std::move(l);
    return g;
  }
  // Translation by the i-th standard basis vector (1-based).
  static AffineIsometry basis_translation(int i, int n) {
    Point v(static_cast<std::size_t>(n), Rat(0));
    if (i < 1 || i > n) throw std::invalid_argument("basis index out of range");
    v[i - 1] = 1;
    return translation(std::move(v));
  }

  int dim() const { return lin.dim(); }

  Point apply(const Point& x) const {
    Point y = lin.apply(x);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += t[i];
    return y;
  }

  AffineIsometry operator*(const AffineIsometry& o) const {
    if (dim() != o.dim()) throw std::invalid_argument("dimension mismatch");
    AffineIsometry r;
    r.lin = lin * o.lin;
    r.t = lin.apply(o.t);
    for (std::size_t i = 0; i < r.t.size(); ++i) r.t[i] += t[i];
    return r;
  }

  AffineIsometry inverse() const {
    AffineIsometry r;
    r.lin = lin.inverse();
    r.t = r.lin.apply(t);
    for (Rat& v : r.t) v = -v;
    return r;
  }

  bool is_identity() const {
    if (!lin.is_identity()) return false;
    for (const Rat& v : t)
      if (v != 0) return false;
    return true;
  }

  bool operator==(const AffineIsometry& o) const { return lin == o.lin && t == o.t; }

  std::string key() const {
    std::string s = lin.key() + "|";
    for (const Rat& v : t) s += v.get_str() + ",";
    return s;
  }

  std::string str() const { return key(); }
};

// ---------------------------------------------------------------------------
// Exact fixed-point sets: solutions of (L_g - I)x = -t_g for all generators.

struct AffineFixedSet {
  bool empty = true;
  Point point;                     // a particular fixed point
  std::vector<Point> basis;        // direction space of the affine subspace
  int ambient_dim() const { return static_cast<int>(point.size()); }
};

namespace detail {

// Row-reduces the augmented system [A | b]; returns false on inconsistency,
// otherwise fills a particular solution (free variables zero) and a basis of
// the homogeneous solution space.
inline bool solve_affine_system(std::vector<std::vector<Rat>> rows, int dim, Point& particular,
                                std::vector<Point>& nullspace) {
  const std::size_t cols = static_cast<std::size_t>(dim) + 1;
  std::vector<int> pivot_col_of_row;
  std::size_t r = 0;
  for (int c = 0; c < dim && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Rat inv = 1 / rows[r][c];
    for (std::size_t j = 0; j < cols; ++j) rows[r][j] *= inv;
    for (std::size_t rr = 0; rr < rows.size(); ++rr) {
      if (rr == r || rows[rr][c] == 0) continue;
      Rat f = rows[rr][c];
      for (std::size_t j = 0; j < cols; ++j) rows[rr][j] -= f * rows[r][j];
    }
    pivot_col_of_row.push_back(c);
    ++r;
  }
  for (std::size_t rr = r; rr < rows.size(); ++rr)
    if (rows[rr][dim] != 0) return false;

  std::vector<int> pivot_row_of_col(dim, -1);
  for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
    pivot_row_of_col[pivot_col_of_row[i]] = static_cast<int>(i);

  particular.assign(dim, Rat(0));
  for (int c = 0; c < dim; ++c)
    if (pivot_row_of_col[c] >= 0) particular[c] = rows[pivot_row_of_col[c]][dim];

  nullspace.clear();
  for (int free = 0; free < dim; ++free) {
    if (pivot_row_of_col[free] >= 0) continue;
    Point v(dim, Rat(0));
    v[free] = 1;
    for (int c = 0; c < dim; ++c)
      if (pivot_row_of_col[c] >= 0) v[c] = -rows[pivot_row_of_col[c]][free];
    nullspace.push_back(std::move(v));
  }
  return true;
}

}  // namespace detail

inline AffineFixedSet fixed_set(const std::vector<AffineIsometry>& gens) {
  if (gens.empty()) throw std::invalid_argument("fixed_set: no generators");
  const int dim = gens.front().dim();
  std::vector<std::vector<Rat>> rows;
  for (const AffineIsometry& g : gens) {
    if (g.dim() != dim) throw std::invalid_argument("fixed_set: dimension mismatch");
    for (int i = 0; i < dim; ++i) {
      std::vector<Rat> row(static_cast<std::size_t>(dim) + 1, Rat(0));
      row[g.lin.src[i]] += g.lin.sign[i];
      row[i] -= 1;
      row[dim] = -g.t[i];
      rows.push_back(std::move(row));
    }
  }
  AffineFixedSet out;
  out.point.assign(dim, Rat(0));
  Point particular;
  std::vector<Point> nullspace;
  if (!detail::solve_affine_system(std::move(rows), dim, particular, nullspace)) {
    out.empty = true;
    return out;
  }
  out.empty = false;
  out.point = std::move(particular);
  out.basis = std::move(nullspace);
  return out;
}

// Exact orthogonal projection onto a non-empty affine subspace.
inline Point project_point(const Point& p, const AffineFixedSet& a) {
  if (a.empty) throw std::invalid_argument("projection onto empty set");
  const int dim = a.ambient_dim();
  if (static_cast<int>(p.size()) != dim) throw std::invalid_argument("dimension mismatch");
  const std::size_t k = a.basis.size();
  if (k == 0) return a.point;

  // Solve (B^T B) y = B^T (p - point), projection = point + B y.
  std::vector<std::vector<Rat>> gram(k, std::vector<Rat>(k + 1, Rat(0)));
  Point diff(dim);
  for (int i = 0; i < dim; ++i) diff[i] = p[i] - a.point[i];
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c)
      for (int i = 0; i < dim; ++i) gram[r][c] += a.basis[r][i] * a.basis[c][i];
    for (int i = 0; i < dim; ++i) gram[r][k] += a.basis[r][i] * diff[i];
  }
  // Gaussian elimination; the Gram matrix of independent vectors is invertible.
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && gram[piv][c] == 0) ++piv;
    if (piv == k) throw std::logic_error("gram matrix singular");
    std::swap(gram[piv], gram[c]);
    Rat inv = 1 / gram[c][c];
    for (std::size_t j = c; j <= k; ++j) gram[c][j] *= inv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || gram[r][c] == 0) continue;
      Rat f = gram[r][c];
      for (std::size_t j = c; j <= k; ++j) gram[r][j] -= f * gram[c][j];
    }
  }
  Point out = a.point;
  for (std::size_t r = 0; r < k; ++r)
    for (int i = 0; i < dim; ++i) out[i] += gram[r][k] * a.basis[r][i];
  return out;
}

inline Rat squared_distance(const Point& p, const Point& q) {
  if (p.size() != q.size()) throw std::invalid_argument("dimension mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < p.size(); ++i) s += (p[i] - q[i]) * (p[i] - q[i]);
  return s;
}

}  // namespace certify::aff
