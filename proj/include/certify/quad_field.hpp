#pragma once

// Exact arithmetic in the field Q(sqrt2, sqrt3): numbers of the form
// a + b*sqrt2 + c*sqrt3 + d*sqrt6 with rational coefficients. This is
// where -cos(pi/m) lives for m in {1,2,3,4,6} and for the infinite label,
// so principal minors of Schlafli matrices built from those labels can be
// evaluated with no rounding at all.

#include "certify/rational.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace certify {

struct QuadF {
  // value = a + b*sqrt2 + c*sqrt3 + d*sqrt6
  Rat a, b, c, d;

  QuadF() : a(0), b(0), c(0), d(0) {}
  explicit QuadF(const Rat& r) : a(r), b(0), c(0), d(0) {}
  QuadF(Rat a_, Rat b_, Rat c_, Rat d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static QuadF rational(long num, long den = 1) { return QuadF(make_rat(num, den)); }
  static QuadF sqrt2() { return QuadF(Rat(0), Rat(1), Rat(0), Rat(0)); }
  static QuadF sqrt3() { return QuadF(Rat(0), Rat(0), Rat(1), Rat(0)); }

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool is_rational() const { return b == 0 && c == 0 && d == 0; }

  QuadF operator+(const QuadF& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  QuadF operator-(const QuadF& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  QuadF operator-() const { return {-a, -b, -c, -d}; }

  QuadF operator*(const QuadF& o) const {
    // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3, sqrt3*sqrt6 = 3*sqrt2
    QuadF r;
    r.a = a * o.a + 2 * b * o.b + 3 * c * o.c + 6 * d * o.d;
    r.b = a * o.b + b * o.a + 3 * c * o.d + 3 * d * o.c;
    r.c = a * o.c + c * o.a + 2 * b * o.d + 2 * d * o.b;
    r.d = a * o.d + d * o.a + b * o.c + c * o.b;
    return r;
  }

  // Galois conjugates: flip the sign of sqrt2 and/or sqrt3.
  QuadF conj2() const { return {a, -b, c, -d}; }
  QuadF conj3() const { return {a, b, -c, -d}; }

  QuadF inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(sqrt2,sqrt3)");
    QuadF t = conj2() * conj3() * conj2().conj3();
    QuadF n = *this * t;  // rational by Galois invariance
    QuadF r = t;
    r.a /= n.a;
    r.b /= n.a;
    r.c /= n.a;
    r.d /= n.a;
    return r;
  }

  QuadF operator/(const QuadF& o) const { return *this * o.inverse(); }

  bool operator==(const QuadF& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }

  // Exact sign. Writes the value as u + v*sqrt3 with u, v in Q(sqrt2) and
  // resolves nested comparisons by squaring; 1, sqrt2, sqrt3, sqrt6 are
  // linearly independent over Q, so zero only at (0,0,0,0).
  int sign() const {
    int su = sign_sqrt2(a, b);
    int sv = sign_sqrt2(c, d);
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    // u and v*sqrt3 have opposite signs: compare u^2 against 3 v^2.
    Rat u2a = a * a + 2 * b * b, u2b = 2 * a * b;
    Rat v2a = 3 * (c * c + 2 * d * d), v2b = 3 * (2 * c * d);
    int cmp = sign_sqrt2(u2a - v2a, u2b - v2b);  // sign of u^2 - 3 v^2
    return cmp == 0 ? 0 : (cmp > 0 ? su : sv);
  }

  double approx() const {
    return a.get_d() + b.get_d() * 1.41421356237309504880 +
           c.get_d() * 1.73205080756887729353 + d.get_d() * 2.44948974968163803450;
  }

  std::string str() const {
    return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + "," + d.get_str() +
           ")";
  }

 private:
  // sign of x + y*sqrt2 with rational x, y
  static int sign_sqrt2(const Rat& x, const Rat& y) {
    int sx = sgn(x), sy = sgn(y);
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    Rat diff = x * x - 2 * y * y;  // |x| vs |y sqrt2|
    int cmp = sgn(diff);
    return cmp == 0 ? 0 : (cmp > 0 ? sx : sy);
  }
};

// Determinant via Gaussian elimination over the field; n stays tiny here.
inline QuadF quad_det(std::vector<std::vector<QuadF>> m) {
  const std::size_t n = m.size();
  QuadF det = QuadF::rational(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return QuadF();  // singular
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    QuadF inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      QuadF f = m[r][col] * inv;
      for (std::size_t cc = col; cc < n; ++cc) m[r][cc] = m[r][cc] - f * m[col][cc];
    }
  }
  return det;
}

}  // namespace certify
