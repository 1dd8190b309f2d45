#pragma once

// Uniform handles over the three concrete engines (free-group automorphisms,
// matrices over the free ring, rational affine isometries) so the certifier
// can evaluate products, invert, compare and enumerate without caring which
// engine a claim lives in. Every element type carries its inverse by
// construction.

#include "certify/affine.hpp"
#include "certify/free_aut.hpp"
#include "certify/ring_matrix.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace certify::run {

// free-group elements
inline fg::FreeAut mul(const fg::FreeAut& a, const fg::FreeAut& b) { return compose(a, b); }
inline fg::FreeAut inv(const fg::FreeAut& a) { return a.inverse(); }
inline fg::FreeAut identity_like(const fg::FreeAut& a) { return fg::FreeAut::identity(a.rank()); }
inline bool is_id(const fg::FreeAut& a) { return a.is_identity(); }
inline std::string element_key(const fg::FreeAut& a) { return a.key(); }
inline std::size_t element_weight(const fg::FreeAut& a) { return a.total_image_length(); }

// matrix-ring elements
inline ncring::MatrixElement mul(const ncring::MatrixElement& a, const ncring::MatrixElement& b) {
  return a * b;
}
inline ncring::MatrixElement inv(const ncring::MatrixElement& a) { return a.inverted(); }
inline ncring::MatrixElement identity_like(const ncring::MatrixElement& a) {
  return ncring::MatrixElement::identity(a.value.size());
}
inline bool is_id(const ncring::MatrixElement& a) { return a.is_identity(); }
inline std::string element_key(const ncring::MatrixElement& a) { return a.key(); }
inline std::size_t element_weight(const ncring::MatrixElement&) { return 1; }

// affine elements
inline aff::AffineIsometry mul(const aff::AffineIsometry& a, const aff::AffineIsometry& b) {
  return a * b;
}
inline aff::AffineIsometry inv(const aff::AffineIsometry& a) { return a.inverse(); }
inline aff::AffineIsometry identity_like(const aff::AffineIsometry& a) {
  return aff::AffineIsometry::identity(a.dim());
}
inline bool is_id(const aff::AffineIsometry& a) { return a.is_identity(); }
inline std::string element_key(const aff::AffineIsometry& a) { return a.key(); }
inline std::size_t element_weight(const aff::AffineIsometry&) { return 1; }

// ---------------------------------------------------------------------------
// Product reading order. Written products like "a b c" can act rightmost
// first (c, then b, then a — function composition order) or leftmost first.
// The sources leave this open, so verification runs record which reading a
// claim holds under, and a failed relation is retried under the other one.

enum class Convention { RightToLeft, LeftToRight };

inline const char* convention_name(Convention c) {
  return c == Convention::RightToLeft ? "right-to-left" : "left-to-right";
}

inline Convention opposite(Convention c) {
  return c == Convention::RightToLeft ? Convention::LeftToRight : Convention::RightToLeft;
}

template <class E>
E eval_product(const std::vector<E>& factors, Convention c) {
  if (factors.empty()) throw std::invalid_argument("empty product");
  if (c == Convention::RightToLeft) {
    E acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = mul(acc, factors[i]);
    return acc;
  }
  E acc = factors.back();
  for (std::size_t i = factors.size(); i-- > 1;) acc = mul(acc, factors[i - 1]);
  return acc;
}

template <class E>
E element_power(const E& e, long k) {
  E acc = identity_like(e);
  E base = k < 0 ? inv(e) : e;
  long reps = k < 0 ? -k : k;
  for (long i = 0; i < reps; ++i) acc = mul(acc, base);
  return acc;
}

}  // namespace certify::run
