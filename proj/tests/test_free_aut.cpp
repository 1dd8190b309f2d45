#include "certify/engine.hpp"
#include "certify/free_aut.hpp"

#include <doctest.h>

#include <vector>

using namespace certify;
using namespace certify::fg;
using certify::run::Convention;
using certify::run::eval_product;

namespace {

FreeAut gen(const GeneratorSymbol& s, int rank) { return make_generator(s, rank); }

FreeWord random_reduced(SplitMix64& rng, int rank, int max_len) {
  std::vector<int> letters;
  int len = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len) + 1));
  for (int i = 0; i < len; ++i) {
    int g = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(rank)));
    letters.push_back(rng.below(2) ? g : -g);
  }
  return FreeWord::from_letters(letters);
}

}  // namespace

TEST_CASE("generator images") {
  FreeAut rho = gen(GeneratorSymbol::right_multiply(1, 2), 2);
  CHECK(rho.image(1).str() == "x1 x2");
  CHECK(rho.image(2).str() == "x2");

  FreeAut eps = gen(GeneratorSymbol::invert(1), 2);
  CHECK(eps.image(1).str() == "x1^-1");
  CHECK(eps.image(2).str() == "x2");

  FreeAut swap = gen(GeneratorSymbol::swap(1, 2), 3);
  CHECK(swap.image(1).str() == "x2");
  CHECK(swap.image(2).str() == "x1");
  CHECK(swap.image(3).str() == "x3");

  FreeAut lam = gen(GeneratorSymbol::left_multiply(1, 2), 2);
  CHECK(lam.image(1).str() == "x2 x1");

  CHECK_THROWS(gen(GeneratorSymbol::right_multiply(1, 3), 2));  // index out of range
  CHECK_THROWS(gen(GeneratorSymbol::right_multiply(1, 1), 2));  // equal indices
  CHECK_THROWS(gen(GeneratorSymbol::right_multiply_word(1, FreeWord::generator(1)), 2));
}

TEST_CASE("apply extends homomorphically") {
  FreeAut rho = gen(GeneratorSymbol::right_multiply(1, 2), 2);
  CHECK(rho.apply(FreeWord::generator(1)).str() == "x1 x2");

  FreeAut eps = gen(GeneratorSymbol::invert(1), 2);
  CHECK(eps.apply(FreeWord::from_letters({1, 2})).str() == "x1^-1 x2");

  // image of x1 under the inverse of r12 solves (r12 o r12^-1) = id
  CHECK(rho.inverse().apply(FreeWord::generator(1)).str() == "x1 x2^-1");
  CHECK(compose(rho, rho.inverse()).is_identity());
}

TEST_CASE("composition") {
  const int n = 2;
  FreeAut rho = gen(GeneratorSymbol::right_multiply(1, 2), n);
  FreeAut lam = gen(GeneratorSymbol::left_multiply(1, 2), n);
  FreeAut a = compose(rho, lam), b = compose(lam, rho);
  CHECK(a == b);
  CHECK(a.image(1).str() == "x2 x1 x2");
  CHECK(compose(rho, FreeAut::identity(n)) == rho);
  CHECK_THROWS(compose(rho, FreeAut::identity(3)));
}

TEST_CASE("conjugation by T = r32^-1 r42 realizes right multiplication") {
  const int n = 4;
  FreeAut t = eval_product<FreeAut>({gen(GeneratorSymbol::right_multiply(3, 2), n).inverse(),
                                     gen(GeneratorSymbol::right_multiply(4, 2), n)},
                                    Convention::RightToLeft);
  FreeAut rho13 = gen(GeneratorSymbol::right_multiply(1, 3), n);
  FreeAut rho12 = gen(GeneratorSymbol::right_multiply(1, 2), n);
  for (long p = 1; p <= 4; ++p) {
    FreeAut lhs = compose(run::element_power(t.inverse(), p),
                          compose(rho13, run::element_power(t, p)));
    FreeAut rhs = compose(rho13, run::element_power(rho12, p));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("equality") {
  const int n = 2;
  FreeAut eps = gen(GeneratorSymbol::invert(1), n);
  CHECK(compose(eps, eps).is_identity());
  CHECK(gen(GeneratorSymbol::right_multiply(1, 2), n) !=
        gen(GeneratorSymbol::left_multiply(1, 2), n));
}

TEST_CASE("the word-parameterized conjugator identity") {
  const int n = 5;
  FreeWord w = FreeWord::from_letters({1, 3});
  FreeAut t = gen(GeneratorSymbol::word_conjugator({{4, w, -1}, {5, w, 1}}), n);
  FreeAut rho24 = gen(GeneratorSymbol::right_multiply(2, 4), n);
  FreeAut rho2w = gen(GeneratorSymbol::right_multiply_word(2, w), n);
  CHECK(compose(t.inverse(), compose(rho24, t)) == compose(rho24, rho2w));
}

TEST_CASE("bounded order computation") {
  const int n = 2;
  OrderResult eps = order_bounded(gen(GeneratorSymbol::invert(1), n), 10);
  CHECK_FALSE(eps.exceeded);
  CHECK(eps.order == 2);

  OrderResult rho = order_bounded(gen(GeneratorSymbol::right_multiply(1, 2), n), 100);
  CHECK(rho.exceeded);

  CHECK_THROWS(order_bounded(FreeAut::identity(n), 0));
  CHECK(order_bounded(FreeAut::identity(n), 5).order == 1);
}

TEST_CASE("successive pairs of the cycle set at rank 4 have order 3") {
  const int n = 4;
  FreeAut s1 = eval_product<FreeAut>({gen(GeneratorSymbol::right_multiply(2, 1), n).inverse(),
                                      gen(GeneratorSymbol::right_multiply(3, 1), n),
                                      gen(GeneratorSymbol::swap(2, 3), n)},
                                     Convention::RightToLeft);
  FreeAut s2 = gen(GeneratorSymbol::swap(3, 4), n);
  FreeAut s3 = gen(GeneratorSymbol::swap(2, 4), n);
  CHECK(order_bounded(s1, 4).order == 2);
  CHECK(order_bounded(compose(s1, s2), 10).order == 3);
  CHECK(order_bounded(compose(s2, s3), 10).order == 3);
  CHECK(order_bounded(compose(s3, s1), 10).order == 3);
}

TEST_CASE("apply is a homomorphism on random words") {
  SplitMix64 rng(5);
  const int n = 3;
  std::vector<FreeAut> pool{gen(GeneratorSymbol::right_multiply(1, 2), n),
                            gen(GeneratorSymbol::left_multiply(2, 3), n),
                            gen(GeneratorSymbol::invert(2), n),
                            gen(GeneratorSymbol::swap(1, 3), n)};
  for (int trial = 0; trial < 200; ++trial) {
    const FreeAut& f = pool[rng.below(pool.size())];
    FreeWord u = random_reduced(rng, n, 12), v = random_reduced(rng, n, 12);
    CHECK(f.apply(u * v) == f.apply(u) * f.apply(v));
  }
}

TEST_CASE("every generator symbol composes with its inverse to the identity") {
  const int n = 5;
  FreeWord w = FreeWord::from_letters({1, 3});
  std::vector<GeneratorSymbol> symbols{
      GeneratorSymbol::right_multiply(1, 2), GeneratorSymbol::left_multiply(2, 5),
      GeneratorSymbol::invert(3), GeneratorSymbol::swap(2, 4),
      GeneratorSymbol::right_multiply_word(2, w),
      GeneratorSymbol::word_conjugator({{4, w, -1}, {5, w, 1}})};
  for (const GeneratorSymbol& s : symbols) {
    FreeAut f = gen(s, n);
    CHECK(compose(f, f.inverse()).is_identity());
    CHECK(compose(f.inverse(), f).is_identity());
  }
}

TEST_CASE("provenance labels survive construction") {
  FreeAut f = gen(GeneratorSymbol::right_multiply(1, 2), 2);
  CHECK(f.provenance() == "r(1,2)");
  CHECK(gen(GeneratorSymbol::invert(1), 2).provenance() == "e(1)");
}
