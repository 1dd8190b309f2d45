#include "certify/affine.hpp"
#include "certify/presentation.hpp"

#include <doctest.h>

#include <vector>

using namespace certify;
using namespace certify::aff;

namespace {

AffineIsometry a1_sigma1(int n) {
  return AffineIsometry::basis_translation(1, n) *
         AffineIsometry::linear(SignedPermutation::flip(1, n));
}

Point rat_point(std::initializer_list<long> nums, long den = 1) {
  Point p;
  for (long v : nums) p.push_back(make_rat(v, den));
  return p;
}

}  // namespace

TEST_CASE("composition") {
  const int n = 2;
  AffineIsometry g = a1_sigma1(n);
  CHECK(g.apply(rat_point({3, 5})) == rat_point({-2, 5}));  // sigma first, then translate
  CHECK((g * g).is_identity());

  AffineIsometry swap = AffineIsometry::linear(SignedPermutation::transposition(1, 2, n));
  AffineIsometry t1 = AffineIsometry::basis_translation(1, n);
  CHECK(swap * t1 * swap == AffineIsometry::basis_translation(2, n));

  AffineIsometry s1 = AffineIsometry::linear(SignedPermutation::flip(1, n));
  CHECK((s1 * s1).is_identity());
  CHECK_THROWS(g * AffineIsometry::identity(3));
}

TEST_CASE("inverses are exact") {
  const int n = 3;
  AffineIsometry g = a1_sigma1(n) * AffineIsometry::linear(SignedPermutation::transposition(2, 3, n));
  CHECK((g * g.inverse()).is_identity());
  CHECK((g.inverse() * g).is_identity());
}

TEST_CASE("fixed sets") {
  const int n = 2;
  SUBCASE("a nonzero translation has no fixed point") {
    CHECK(fixed_set({AffineIsometry::basis_translation(1, n)}).empty);
  }
  SUBCASE("a reflection fixes its hyperplane") {
    AffineFixedSet f = fixed_set({AffineIsometry::linear(SignedPermutation::flip(1, n))});
    REQUIRE_FALSE(f.empty);
    CHECK(f.point[0] == 0);
    CHECK(f.basis.size() == 1);
    CHECK(f.basis[0][0] == 0);  // direction space inside x1 = 0
  }
  SUBCASE("a glide-free mixed element fixes x1 = 1/2") {
    AffineFixedSet f = fixed_set({a1_sigma1(n)});
    REQUIRE_FALSE(f.empty);
    CHECK(f.point[0] == Rat(1, 2));
    CHECK(f.basis.size() == 1);
    CHECK(f.basis[0][0] == 0);
  }
  SUBCASE("fixed points really are fixed") {
    AffineIsometry g = a1_sigma1(3) * AffineIsometry::linear(SignedPermutation::transposition(2, 3, 3));
    AffineFixedSet f = fixed_set({g});
    REQUIRE_FALSE(f.empty);
    CHECK(g.apply(f.point) == f.point);
    for (const Point& b : f.basis) {
      Point moved = f.point;
      for (std::size_t i = 0; i < moved.size(); ++i) moved[i] += b[i];
      CHECK(g.apply(moved) == moved);
    }
  }
}

TEST_CASE("conjugated linear parts fix the conjugation point") {
  // t_p L t_p^{-1} fixes p, so the solved fixed set must be nonempty and
  // contain p; membership is checked through the projection being identity.
  SplitMix64 rng(53);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 2 + static_cast<int>(rng.below(3));
    Point p;
    for (int i = 0; i < n; ++i) p.push_back(make_rat(rng.range(-10, 10), 4));
    AffineIsometry lin = AffineIsometry::identity(n);
    int pieces = 1 + static_cast<int>(rng.below(3));
    for (int k = 0; k < pieces; ++k) {
      if (rng.below(2)) {
        lin = lin * AffineIsometry::linear(
                        aff::SignedPermutation::flip(1 + static_cast<int>(rng.below(n)), n));
      } else {
        int i = 1 + static_cast<int>(rng.below(n - 1));
        lin = lin * AffineIsometry::linear(aff::SignedPermutation::transposition(i, i + 1, n));
      }
    }
    Point neg = p;
    for (Rat& v : neg) v = -v;
    AffineIsometry g =
        AffineIsometry::translation(p) * lin * AffineIsometry::translation(neg);
    REQUIRE(g.apply(p) == p);
    AffineFixedSet f = fixed_set({g});
    REQUIRE_FALSE(f.empty);
    CHECK(project_point(p, f) == p);
  }
}

TEST_CASE("projection") {
  const int n = 2;
  AffineFixedSet wall = fixed_set({AffineIsometry::linear(SignedPermutation::flip(1, n))});
  SUBCASE("drops the normal component") {
    CHECK(project_point(rat_point({3, 4}), wall) == rat_point({0, 4}));
  }
  SUBCASE("idempotent") {
    Point p = project_point(rat_point({7, -2}, 3), wall);
    CHECK(project_point(p, wall) == p);
  }
  SUBCASE("projection onto a single point") {
    AffineFixedSet origin =
        fixed_set({AffineIsometry::linear(SignedPermutation::flip(1, n)),
                   AffineIsometry::linear(SignedPermutation::flip(2, n))});
    REQUIRE_FALSE(origin.empty);
    CHECK(origin.basis.empty());
    CHECK(project_point(rat_point({5, 9}), origin) == rat_point({0, 0}));
  }
  CHECK_THROWS(project_point(rat_point({1, 1}),
                             fixed_set({AffineIsometry::basis_translation(1, n)})));
}

TEST_CASE("projection is equivariant under stabilizing isometries") {
  const int n = 3;
  // A = fixed set of sigma_1; the sign/permutation group of coordinates 2,3
  // preserves it.
  AffineFixedSet a = fixed_set({AffineIsometry::linear(SignedPermutation::flip(1, n))});
  std::vector<AffineIsometry> stabilizers{
      AffineIsometry::linear(SignedPermutation::flip(2, n)),
      AffineIsometry::linear(SignedPermutation::flip(3, n)),
      AffineIsometry::linear(SignedPermutation::transposition(2, 3, n))};
  SplitMix64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    Point p;
    for (int i = 0; i < n; ++i) p.push_back(make_rat(rng.range(-20, 20), 4));
    for (const AffineIsometry& g : stabilizers)
      CHECK(project_point(g.apply(p), a) == g.apply(project_point(p, a)));
  }
}

TEST_CASE("projection never increases distances") {
  const int n = 3;
  AffineIsometry g = a1_sigma1(n);
  AffineIsometry h = AffineIsometry::linear(SignedPermutation::transposition(2, 3, n));
  AffineFixedSet a = fixed_set({g, h});
  REQUIRE_FALSE(a.empty);
  SplitMix64 rng(29);
  for (int trial = 0; trial < 80; ++trial) {
    Point p, q;
    for (int i = 0; i < n; ++i) {
      p.push_back(make_rat(rng.range(-12, 12), 3));
      q.push_back(make_rat(rng.range(-12, 12), 3));
    }
    CHECK(squared_distance(project_point(p, a), project_point(q, a)) <= squared_distance(p, q));
  }
}

TEST_CASE("the path-presentation images satisfy every relator") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<AffineIsometry> img;
    img.push_back(a1_sigma1(n));
    for (int i = 1; i <= n - 1; ++i)
      img.push_back(AffineIsometry::linear(SignedPermutation::transposition(i, i + 1, n)));
    img.push_back(AffineIsometry::linear(SignedPermutation::flip(n, n)));
    run::Presentation p =
        run::Presentation::from_coxeter(cox::signed_permutation_path_matrix(n));
    CHECK(run::verify_homomorphism(p, img).verified);
    // sharpness: the full set has no common fixed point in dimension n
    CHECK(fixed_set(img).empty);
  }
}
