#pragma once

// Square matrices over Z<x_1,...,x_k>. An identity verified here holds over
// every associative ring with identity, since the entries are free. Inverses
// are never computed from scratch: every group element carries the inverse of
// its generator expression, and products maintain the pair.

#include "certify/nc_poly.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace certify::ncring {

class RingMatrix {
 public:
  explicit RingMatrix(std::size_t n) : n_(check(n)), a_(n * n) {}

  static RingMatrix identity(std::size_t n) {
    RingMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = NcPoly::one();
    return m;
  }

  // e_ij(r): 1s on the diagonal, r in the (i,j) slot (1-based, i != j).
  static RingMatrix elementary(int i, int j, const NcPoly& r, std::size_t n) {
    if (i < 1 || j < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(j) > n)
      throw std::invalid_argument("elementary: index out of range");
    if (i == j) throw std::invalid_argument("elementary: indices must differ");
    RingMatrix m = identity(n);
    m.at(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(j) - 1) = r;
    return m;
  }

  static RingMatrix sign_diag(const std::vector<int>& signs) {
    RingMatrix m(signs.size());
    for (std::size_t i = 0; i < signs.size(); ++i) {
      if (signs[i] != 1 && signs[i] != -1)
        throw std::invalid_argument("sign_diag: entries must be +-1");
      m.at(i, i) = NcPoly::constant(signs[i]);
    }
    return m;
  }

  // Permutation matrix sending basis vector e_j to e_{perm[j]} (0-based map).
  static RingMatrix permutation(const std::vector<std::size_t>& perm) {
    const std::size_t n = perm.size();
    std::vector<bool> seen(n, false);
    RingMatrix m(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (perm[j] >= n || seen[perm[j]]) throw std::invalid_argument("not a permutation");
      seen[perm[j]] = true;
      m.at(perm[j], j) = NcPoly::one();
    }
    return m;
  }

  // Transposition (i j), 1-based, as a permutation matrix.
  static RingMatrix transposition(int i, int j, std::size_t n) {
    if (i < 1 || j < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(j) > n ||
        i == j)
      throw std::invalid_argument("transposition: bad indices");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::swap(perm[static_cast<std::size_t>(i) - 1], perm[static_cast<std::size_t>(j) - 1]);
    return permutation(perm);
  }

  static RingMatrix scalar_neg(std::size_t n) {
    RingMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = NcPoly::constant(-1);
    return m;
  }

  std::size_t size() const { return n_; }
  NcPoly& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const NcPoly& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  RingMatrix operator*(const RingMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("size mismatch");
    RingMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) {
        if (at(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j) {
          if (o.at(k, j).is_zero()) continue;
          r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        }
      }
    return r;
  }

  RingMatrix operator+(const RingMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("size mismatch");
    RingMatrix r(n_);
    for (std::size_t i = 0; i < n_ * n_; ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }

  RingMatrix transpose() const {
    RingMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool is_identity() const { return *this == identity(n_); }
  bool operator==(const RingMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const RingMatrix& o) const { return !(*this == o); }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < n_; ++i) {
      if (i) s += "; ";
      for (std::size_t j = 0; j < n_; ++j) {
        if (j) s += ", ";
        s += at(i, j).str();
      }
    }
    return s + "]";
  }

 private:
  static std::size_t check(std::size_t n) {
    if (n < 1) throw std::invalid_argument("matrix size must be >= 1");
    return n;
  }

  std::size_t n_;
  std::vector<NcPoly> a_;
};

// A group element of GL_n over the free ring: the matrix together with the
// inverse built from the same generator expression.
struct MatrixElement {
  RingMatrix value, inverse;

  static MatrixElement identity(std::size_t n) {
    return {RingMatrix::identity(n), RingMatrix::identity(n)};
  }
  static MatrixElement elementary(int i, int j, const NcPoly& r, std::size_t n) {
    return {RingMatrix::elementary(i, j, r, n), RingMatrix::elementary(i, j, -r, n)};
  }
  static MatrixElement sign_diag(const std::vector<int>& signs) {
    RingMatrix d = RingMatrix::sign_diag(signs);
    return {d, d};
  }
  static MatrixElement permutation(const std::vector<std::size_t>& perm) {
    RingMatrix p = RingMatrix::permutation(perm);
    return {p, p.transpose()};
  }
  static MatrixElement transposition(int i, int j, std::size_t n) {
    RingMatrix p = RingMatrix::transposition(i, j, n);
    return {p, p};
  }
  static MatrixElement scalar_neg(std::size_t n) {
    RingMatrix m = RingMatrix::scalar_neg(n);
    return {m, m};
  }

  MatrixElement operator*(const MatrixElement& o) const {
    return {value * o.value, o.inverse * inverse};
  }
  MatrixElement inverted() const { return {inverse, value}; }
  bool is_identity() const { return value.is_identity(); }
  bool operator==(const MatrixElement& o) const { return value == o.value; }
  std::string key() const { return value.str(); }
};

// [a, b] = a b a^{-1} b^{-1}
inline MatrixElement commutator(const MatrixElement& a, const MatrixElement& b) {
  return a * b * a.inverted() * b.inverted();
}

// ---------------------------------------------------------------------------
// Augmented form: [[M, v], [0, 1]], the matrix model of the pair (v, M) in
// R^n x| GL_n(R). Multiplication of augmented matrices realizes the
// semidirect law (M, v)(N, w) = (MN, v + Mw).

class AugmentedMatrix {
 public:
  AugmentedMatrix(const RingMatrix& linear, const std::vector<NcPoly>& translation)
      : m_(linear.size() + 1) {
    const std::size_t n = linear.size();
    if (translation.size() != n) throw std::invalid_argument("translation size mismatch");
    m_ = RingMatrix::identity(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m_.at(i, j) = linear.at(i, j);
      m_.at(i, n) = translation[i];
    }
  }

  // Wraps an existing (n+1)x(n+1) matrix; the last row must be (0,...,0,1).
  explicit AugmentedMatrix(const RingMatrix& full) : m_(full) {
    const std::size_t n = full.size();
    if (n < 2) throw std::invalid_argument("augmented matrix needs size >= 2");
    for (std::size_t j = 0; j + 1 < n; ++j)
      if (!m_.at(n - 1, j).is_zero())
        throw std::invalid_argument("augmented matrix: last row must be (0,...,0,1)");
    if (!m_.at(n - 1, n - 1).is_one())
      throw std::invalid_argument("augmented matrix: last row must end in 1");
  }

  const RingMatrix& full() const { return m_; }
  std::size_t inner_size() const { return m_.size() - 1; }

  RingMatrix linear() const {
    const std::size_t n = inner_size();
    RingMatrix l(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) l.at(i, j) = m_.at(i, j);
    return l;
  }

  std::vector<NcPoly> translation() const {
    const std::size_t n = inner_size();
    std::vector<NcPoly> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = m_.at(i, n);
    return v;
  }

  AugmentedMatrix operator*(const AugmentedMatrix& o) const {
    return AugmentedMatrix(m_ * o.m_);
  }

 private:
  RingMatrix m_;
};

// Augmented group element whose linear part has a known inverse.
inline MatrixElement augmented_element(const MatrixElement& linear,
                                       const std::vector<NcPoly>& translation) {
  const std::size_t n = linear.value.size();
  AugmentedMatrix fwd(linear.value, translation);
  // (M, v)^{-1} = (M^{-1}, -M^{-1} v)
  std::vector<NcPoly> back(n);
  for (std::size_t i = 0; i < n; ++i) {
    NcPoly s;
    for (std::size_t j = 0; j < n; ++j) s = s + linear.inverse.at(i, j) * translation[j];
    back[i] = -s;
  }
  AugmentedMatrix inv(linear.inverse, back);
  return {fwd.full(), inv.full()};
}

}  // namespace certify::ncring
