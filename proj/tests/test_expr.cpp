#include "certify/expr.hpp"

#include <doctest.h>

using namespace certify;
using namespace certify::expr;
using certify::run::Convention;
using certify::run::eval_product;

TEST_CASE("word syntax") {
  CHECK(parse_word("x1 x3^-1").str() == "x1 x3^-1");
  CHECK(parse_word("x1 x1^-1").empty());
  CHECK_THROWS(parse_word("y1"));
  CHECK_THROWS(parse_word("x"));
}

TEST_CASE("free-group factors") {
  auto factors = parse_free_factors("r(2,1)^-1 r(3,1) s(2,3)", 4);
  REQUIRE(factors.size() == 3);
  CHECK(factors[0] == fg::make_generator(fg::GeneratorSymbol::right_multiply(2, 1), 4).inverse());
  CHECK(factors[2].image(2).str() == "x3");

  fg::FreeAut rw = parse_free_factors("rw(2,\"x1 x3\")", 4)[0];
  CHECK(rw.image(2).str() == "x2 x1 x3");

  fg::FreeAut conj = parse_free_factors("conj(4,\"x1 x3\",-1;5,\"x1 x3\",1)", 5)[0];
  CHECK(conj.image(4).str() == "x4 x3^-1 x1^-1");
  CHECK(conj.image(5).str() == "x5 x1 x3");

  CHECK_THROWS(parse_free_factors("q(1,2)", 3));
  CHECK_THROWS(parse_free_factors("r(1,2", 3));
  CHECK_THROWS(parse_free_factors("", 3));
  CHECK_THROWS(parse_free_factors("r(1,5)", 3));
}

TEST_CASE("reading order changes the element, not the factors") {
  auto factors = parse_free_factors("r(1,2) e(2)", 2);
  fg::FreeAut rtl = eval_product(factors, Convention::RightToLeft);
  fg::FreeAut ltr = eval_product(factors, Convention::LeftToRight);
  CHECK(rtl.image(1).str() == "x1 x2");      // e(2) acts first
  CHECK(ltr.image(1).str() == "x1 x2^-1");   // r(1,2) acts first
}

TEST_CASE("polynomials") {
  using ncring::NcPoly;
  CHECK(parse_poly("x") == NcPoly::indeterminate("x"));
  CHECK(parse_poly("r s") == NcPoly::indeterminate("r") * NcPoly::indeterminate("s"));
  CHECK(parse_poly("2 - 3 r s").str() == "2 - 3 r s");
  CHECK(parse_poly("x y - y x").term_count() == 2);
  CHECK(parse_poly("-x").str() == "-x");
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("x1 x3").str() == "x1 x3");  // names may carry digits
  CHECK_THROWS(parse_poly(""));
  CHECK_THROWS(parse_poly("+"));
}

TEST_CASE("matrix factors") {
  auto fs = parse_matrix_factors("E(1,2,x,3) * I(3) * Dg(-1,1,1) * P(1 2,3) * neg(3)");
  CHECK(fs.size() == 5);
  CHECK(fs[0].value.at(0, 1) == ncring::NcPoly::indeterminate("x"));
  CHECK(fs[3].value.at(1, 0) == ncring::NcPoly::one());

  auto inv = parse_matrix_factors("E(1,2,x,2)^-1");
  CHECK(inv[0].value.at(0, 1) == -ncring::NcPoly::indeterminate("x"));

  // three-cycle permutation
  auto cyc = parse_matrix_factors("P(1 2 3,3)");
  CHECK(cyc[0].value.at(1, 0) == ncring::NcPoly::one());  // e1 -> e2

  CHECK_THROWS(parse_matrix_factors("E(1,1,x,2)"));
  CHECK_THROWS(parse_matrix_factors("I(2) * I(3)"));  // size mismatch
  CHECK_THROWS(parse_matrix_factors("Z(1)"));
}

TEST_CASE("affine factors") {
  auto fs = parse_affine_factors("t(1,-1/2) * sg(1) * p(1,2)", 2);
  CHECK(fs.size() == 3);
  CHECK(fs[0].t[1] == Rat(-1, 2));
  CHECK(fs[1].lin.sign[0] == -1);

  aff::AffineIsometry g = eval_product(parse_affine_factors("t(1,0) * sg(1)", 2),
                                       Convention::RightToLeft);
  CHECK(g.apply({Rat(2), Rat(0)}) == aff::Point{Rat(-1), Rat(0)});

  CHECK_THROWS(parse_affine_factors("t(1)", 2));     // arity
  CHECK_THROWS(parse_affine_factors("sg(3)", 2));    // out of range
  CHECK_THROWS(parse_affine_factors("w(1,2)", 2));  // unknown
}
