#pragma once

// The claims engine. A claim is a checkable assertion (relation, order,
// finiteness, classification, identity) bundled with the engine it runs in,
// caps, and the statement it certifies. The built-in registry holds the
// finite computations the surrounding theory leans on; run_claims executes
// them and assembles a deterministic report.
//
// Reading order of written products is not fixed by the sources. Every
// free-group claim that fails under the primary right-to-left reading is
// retried under the opposite one, and the report records which reading
// verified; a claim that fails under both is refuted.

#include "certify/affine.hpp"
#include "certify/closure.hpp"
#include "certify/coxeter.hpp"
#include "certify/engine.hpp"
#include "certify/expr.hpp"
#include "certify/free_aut.hpp"
#include "certify/nc_poly.hpp"
#include "certify/presentation.hpp"
#include "certify/ring_matrix.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace certify::run {

enum class Status { Verified, Refuted, ExceededCap, Indeterminate };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Verified:
      return "verified";
    case Status::Refuted:
      return "refuted";
    case Status::ExceededCap:
      return "exceeded_cap";
    case Status::Indeterminate:
      return "indeterminate";
  }
  return "?";
}

// Covers every finite group the registry enumerates, with room to spare,
// while bounding memory at desk scale.
constexpr std::uint64_t kDefaultClosureCap = 200000;

struct ClaimContext {
  std::uint64_t cap = kDefaultClosureCap;
  Convention conv = Convention::RightToLeft;
};

struct ClaimOutcome {
  Status status = Status::Indeterminate;
  std::string witness;
  std::string convention_label;  // empty: runner default for the engine
};

struct Claim {
  std::string id;
  std::string kind;    // relation | order | finiteness | classification | identity
  std::string engine;  // free-group | matrix-ring | affine | coxeter
  std::string anchor;  // the statement this claim certifies
  std::uint64_t cap = kDefaultClosureCap;
  bool convention_sensitive = false;
  std::function<ClaimOutcome(const ClaimContext&)> run;
};

struct ReportEntry {
  std::string id;
  std::string status;
  std::string witness;
  std::string convention;
  std::int64_t millis = 0;
};

struct Report {
  std::vector<ReportEntry> entries;

  bool any_refuted() const {
    for (const ReportEntry& e : entries)
      if (e.status == "refuted") return true;
    return false;
  }
};

struct RunOptions {
  std::optional<std::uint64_t> cap_override;
};

inline Report run_claims(const std::vector<Claim>& claims, RunOptions opts = {}) {
  Report report;
  for (const Claim& c : claims) {
    ClaimContext ctx;
    ctx.cap = opts.cap_override.value_or(c.cap);
    ctx.conv = Convention::RightToLeft;
    auto t0 = std::chrono::steady_clock::now();
    ClaimOutcome out;
    try {
      out = c.run(ctx);
      std::string used = convention_name(ctx.conv);
      if (out.status != Status::Verified && c.engine == "free-group") {
        ClaimContext retry = ctx;
        retry.conv = Convention::LeftToRight;
        ClaimOutcome second = c.run(retry);
        if (second.status == Status::Verified) {
          out = second;
          used = convention_name(retry.conv);
        }
      }
      if (out.convention_label.empty()) {
        if (c.engine == "free-group")
          out.convention_label = used;
        else if (c.engine == "affine")
          out.convention_label = "linear-then-translate";
        else
          out.convention_label = "n/a";
      }
    } catch (const std::exception& e) {
      out.status = Status::Indeterminate;
      out.witness = std::string("input error: ") + e.what();
      out.convention_label = "n/a";
    }
    auto t1 = std::chrono::steady_clock::now();
    ReportEntry entry;
    entry.id = c.id;
    entry.status = status_name(out.status);
    entry.witness = out.witness;
    entry.convention = out.convention_label;
    entry.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    report.entries.push_back(std::move(entry));
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const ReportEntry& a, const ReportEntry& b) { return a.id < b.id; });
  return report;
}

// ---------------------------------------------------------------------------
// Built-in registry helpers

namespace reg {

using fg::FreeAut;
using fg::FreeWord;
using fg::GeneratorSymbol;
using ncring::MatrixElement;
using ncring::NcPoly;
using ncring::RingMatrix;

inline FreeAut gen(const GeneratorSymbol& s, int rank) { return fg::make_generator(s, rank); }

inline MatrixElement eps_element(int idx, std::size_t n) {
  std::vector<int> signs(n, 1);
  signs.at(static_cast<std::size_t>(idx) - 1) = -1;
  return MatrixElement::sign_diag(signs);
}

// Affine images of the path-presentation generators in dimension n:
// s_1 = a_1 sigma_1, s_{i+1} = (i,i+1), s_{n+1} = sigma_n.
inline std::vector<aff::AffineIsometry> path_affine_images(int n) {
  std::vector<aff::AffineIsometry> img;
  img.push_back(aff::AffineIsometry::basis_translation(1, n) *
                aff::AffineIsometry::linear(aff::SignedPermutation::flip(1, n)));
  for (int i = 1; i <= n - 1; ++i)
    img.push_back(
        aff::AffineIsometry::linear(aff::SignedPermutation::transposition(i, i + 1, n)));
  img.push_back(aff::AffineIsometry::linear(aff::SignedPermutation::flip(n, n)));
  return img;
}

// Elements of the order-3 cycle set at rank n:
// { r21^-1 r31 (23), (34), ..., (n-1,n), (2,n) }.
inline std::vector<FreeAut> niel_set(int n, Convention conv) {
  std::vector<FreeAut> set;
  std::vector<FreeAut> first{gen(GeneratorSymbol::right_multiply(2, 1), n).inverse(),
                             gen(GeneratorSymbol::right_multiply(3, 1), n),
                             gen(GeneratorSymbol::swap(2, 3), n)};
  set.push_back(eval_product(first, conv));
  for (int i = 3; i <= n - 1; ++i) set.push_back(gen(GeneratorSymbol::swap(i, i + 1), n));
  set.push_back(gen(GeneratorSymbol::swap(2, n), n));
  return set;
}

// Pairwise-finite generating set at rank n:
// { e2 r12, e1 (23), e1 e2 (12), (34), ..., (n-1,n), e_n }.
inline std::vector<FreeAut> pairwise_set(int n, Convention conv) {
  std::vector<FreeAut> set;
  set.push_back(eval_product<FreeAut>({gen(GeneratorSymbol::invert(2), n),
                                       gen(GeneratorSymbol::right_multiply(1, 2), n)},
                                      conv));
  set.push_back(eval_product<FreeAut>(
      {gen(GeneratorSymbol::invert(1), n), gen(GeneratorSymbol::swap(2, 3), n)}, conv));
  set.push_back(eval_product<FreeAut>({gen(GeneratorSymbol::invert(1), n),
                                       gen(GeneratorSymbol::invert(2), n),
                                       gen(GeneratorSymbol::swap(1, 2), n)},
                                      conv));
  for (int i = 3; i <= n - 1; ++i) set.push_back(gen(GeneratorSymbol::swap(i, i + 1), n));
  set.push_back(gen(GeneratorSymbol::invert(n), n));
  return set;
}

// Companion set S1 = { e2 r12, e3, e1 (23), e1 e2 (12) }, rank-3 content
// evaluated inside rank n.
inline std::vector<FreeAut> pairwise_set_small(int n, Convention conv) {
  std::vector<FreeAut> set;
  set.push_back(eval_product<FreeAut>({gen(GeneratorSymbol::invert(2), n),
                                       gen(GeneratorSymbol::right_multiply(1, 2), n)},
                                      conv));
  set.push_back(gen(GeneratorSymbol::invert(3), n));
  set.push_back(eval_product<FreeAut>(
      {gen(GeneratorSymbol::invert(1), n), gen(GeneratorSymbol::swap(2, 3), n)}, conv));
  set.push_back(eval_product<FreeAut>({gen(GeneratorSymbol::invert(1), n),
                                       gen(GeneratorSymbol::invert(2), n),
                                       gen(GeneratorSymbol::swap(1, 2), n)},
                                      conv));
  return set;
}

// T: x_4 -> x_4 w^-1, x_5 -> x_5 w as a single symbol (reading-order free).
inline FreeAut t_conjugator(const FreeWord& w, int rank) {
  return gen(GeneratorSymbol::word_conjugator({{4, w, -1}, {5, w, +1}}), rank);
}

// All 2-subsets finite under the cap; fills `witness_pair` on the first miss.
inline bool all_pairs_finite(const std::vector<FreeAut>& set, std::uint64_t cap,
                             std::string& witness_pair) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      ClosureOutcome c = subgroup_closure<FreeAut>({set[i], set[j]}, cap);
      if (c.exceeded) {
        witness_pair = "pair {" + set[i].provenance() + ", " + set[j].provenance() +
                       "} exceeded cap " + std::to_string(cap);
        return false;
      }
    }
  return true;
}

}  // namespace reg

// ---------------------------------------------------------------------------
// Built-in registry

inline std::vector<Claim> builtin_claims() {
  using namespace reg;
  std::vector<Claim> claims;

  // C1: elementary matrix identity families over Z<r,s>, n = 4, all tuples.
  claims.push_back(Claim{
      "C1", "identity", "matrix-ring",
      "e_ij(r+s) = e_ij(r) e_ij(s); [e_ij(r), e_jk(s)] = e_ik(rs); "
      "[e_ij(r), e_kl(s)] = I, all distinct index tuples at n = 4",
      kDefaultClosureCap, false, [](const ClaimContext&) -> ClaimOutcome {
        const std::size_t n = 4;
        NcPoly r = NcPoly::indeterminate("r"), s = NcPoly::indeterminate("s");
        int checks = 0;
        for (int i = 1; i <= 4; ++i)
          for (int j = 1; j <= 4; ++j) {
            if (i == j) continue;
            if (RingMatrix::elementary(i, j, r + s, n) !=
                RingMatrix::elementary(i, j, r, n) * RingMatrix::elementary(i, j, s, n))
              return {Status::Refuted,
                      "additivity fails at (" + std::to_string(i) + "," + std::to_string(j) + ")",
                      ""};
            ++checks;
          }
        for (int i = 1; i <= 4; ++i)
          for (int j = 1; j <= 4; ++j)
            for (int k = 1; k <= 4; ++k) {
              if (i == j || j == k || i == k) continue;
              MatrixElement c = commutator(MatrixElement::elementary(i, j, r, n),
                                           MatrixElement::elementary(j, k, s, n));
              if (c.value != RingMatrix::elementary(i, k, r * s, n))
                return {Status::Refuted,
                        "overlap commutator fails at (" + std::to_string(i) + "," +
                            std::to_string(j) + "," + std::to_string(k) + ")",
                        ""};
              ++checks;
            }
        for (int i = 1; i <= 4; ++i)
          for (int j = 1; j <= 4; ++j)
            for (int k = 1; k <= 4; ++k)
              for (int l = 1; l <= 4; ++l) {
                if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
                if (!commutator(MatrixElement::elementary(i, j, r, n),
                                MatrixElement::elementary(k, l, s, n))
                         .is_identity())
                  return {Status::Refuted, "disjoint commutator fails", ""};
                ++checks;
              }
        return {Status::Verified,
                std::to_string(checks) + " index patterns verified exactly over Z<r,s>", ""};
      }});

  // C2: the five-factor decomposition of diag(-1,-1).
  claims.push_back(Claim{
      "C2", "identity", "matrix-ring",
      "e12(1) e21(-1) e12(2) e21(-1) e12(1) = diag(-1,-1)", kDefaultClosureCap, false,
      [](const ClaimContext&) -> ClaimOutcome {
        auto one = NcPoly::constant(1);
        auto two = NcPoly::constant(2);
        auto neg = NcPoly::constant(-1);
        RingMatrix prod = RingMatrix::elementary(1, 2, one, 2) *
                          RingMatrix::elementary(2, 1, neg, 2) *
                          RingMatrix::elementary(1, 2, two, 2) *
                          RingMatrix::elementary(2, 1, neg, 2) *
                          RingMatrix::elementary(1, 2, one, 2);
        if (prod != RingMatrix::sign_diag({-1, -1}))
          return {Status::Refuted, "product = " + prod.str(), ""};
        return {Status::Verified, "five-factor product equals diag(-1,-1) exactly", ""};
      }});

  // C3: the affine assignment satisfies the path presentation for n = 2,3,4.
  claims.push_back(Claim{
      "C3", "relation", "affine",
      "s1 -> a1 sg1, s_{i+1} -> (i,i+1), s_{n+1} -> sg_n is a homomorphism from "
      "the (4,3,...,3,4) path presentation, n = 2,3,4",
      kDefaultClosureCap, false, [](const ClaimContext&) -> ClaimOutcome {
        std::string notes;
        for (int n = 2; n <= 4; ++n) {
          cox::CoxeterMatrix m = cox::signed_permutation_path_matrix(n);
          Presentation p = Presentation::from_coxeter(m);
          HomomorphismCheck hc = verify_homomorphism(p, path_affine_images(n));
          if (!hc.verified)
            return {Status::Refuted, "n=" + std::to_string(n) + ": relator " + hc.failing_relator,
                    ""};
          if (notes.empty() && !m.warnings().empty()) notes = "; " + m.warnings().front();
        }
        return {Status::Verified, "all relators verified for n=2,3,4" + notes, ""};
      }});

  // C4: row-one embedding with the sign twist, both epsilon index readings.
  claims.push_back(Claim{
      "C4", "relation", "matrix-ring",
      "a_i -> e_{1,i+1}(x), sigma_i -> -I eps, (i,i+1) -> -I P over Z<x> at n = 5; "
      "the epsilon index is checked verbatim and shifted by one",
      kDefaultClosureCap, false, [](const ClaimContext&) -> ClaimOutcome {
        const std::size_t size = 5;
        const int nu = 4;  // path presentation parameter; rank nu+1 = matrix size
        NcPoly x = NcPoly::indeterminate("x");
        MatrixElement neg = MatrixElement::scalar_neg(size);
        auto images = [&](bool shift) {
          std::vector<MatrixElement> img;
          img.push_back(MatrixElement::elementary(1, 2, x, size) *
                        (neg * eps_element(shift ? 2 : 1, size)));
          for (int i = 1; i <= nu - 1; ++i)
            img.push_back(neg * MatrixElement::transposition(i + 1, i + 2, size));
          img.push_back(neg * eps_element(shift ? nu + 1 : nu, size));
          return img;
        };
        Presentation p =
            Presentation::from_coxeter(cox::signed_permutation_path_matrix(nu));
        HomomorphismCheck shifted = verify_homomorphism(p, images(true));
        HomomorphismCheck verbatim = verify_homomorphism(p, images(false));
        if (!shifted.verified && !verbatim.verified)
          return {Status::Refuted,
                  "both epsilon readings fail; shifted fails at " + shifted.failing_relator, ""};
        std::string label = shifted.verified && verbatim.verified
                                ? "both"
                                : (shifted.verified ? "epsilon-shift" : "epsilon-verbatim");
        std::string witness = shifted.verified
                                  ? "epsilon at position i+1 satisfies every relator"
                                  : "epsilon at position i satisfies every relator";
        if (shifted.verified && !verbatim.verified)
          witness += "; verbatim reading fails at " + verbatim.failing_relator;
        if (!shifted.verified && verbatim.verified)
          witness += "; shifted reading fails at " + shifted.failing_relator;
        return {Status::Verified, witness, label};
      }});

  // C5: translation-by-x generators inside the augmented matrix group.
  claims.push_back(Claim{
      "C5", "relation", "matrix-ring",
      "(x,sigma_1), (12), ..., (n-1,n), sigma_n satisfy the (4,3,...,3,4) path "
      "presentation inside the augmented matrix group over Z<x>, n = 3,4",
      kDefaultClosureCap, false, [](const ClaimContext&) -> ClaimOutcome {
        NcPoly x = NcPoly::indeterminate("x");
        for (int n = 3; n <= 4; ++n) {
          const std::size_t size = static_cast<std::size_t>(n);
          std::vector<NcPoly> zero(size), xe1(size);
          xe1[0] = x;
          std::vector<MatrixElement> img;
          img.push_back(ncring::augmented_element(eps_element(1, size), xe1));
          for (int i = 1; i <= n - 1; ++i)
            img.push_back(
                ncring::augmented_element(MatrixElement::transposition(i, i + 1, size), zero));
          img.push_back(ncring::augmented_element(eps_element(n, size), zero));
          Presentation p =
              Presentation::from_coxeter(cox::signed_permutation_path_matrix(n));
          HomomorphismCheck hc = verify_homomorphism(p, img);
          if (!hc.verified)
            return {Status::Refuted,
                    "n=" + std::to_string(n) + ": relator " + hc.failing_relator, ""};
        }
        return {Status::Verified, "all relators verified for n=3,4 over Z<x>", ""};
      }});

  // C6: successive pairs in the cycle set have order exactly 3.
  claims.push_back(Claim{
      "C6", "order", "free-group",
      "the product of any two successive elements of "
      "{r21^-1 r31 (23), (34), ..., (n-1,n), (2,n)}, cyclically, has order 3; n = 4,5,6",
      kDefaultClosureCap, true, [](const ClaimContext& ctx) -> ClaimOutcome {
        for (int n = 4; n <= 6; ++n) {
          std::vector<FreeAut> set = niel_set(n, ctx.conv);
          for (std::size_t k = 0; k < set.size(); ++k) {
            FreeAut prod = eval_product<FreeAut>({set[k], set[(k + 1) % set.size()]}, ctx.conv);
            fg::OrderResult ord = fg::order_bounded(prod, 12);
            if (ord.exceeded || ord.order != 3)
              return {Status::Refuted,
                      "n=" + std::to_string(n) + ": pair at position " + std::to_string(k + 1) +
                          " has order " + (ord.exceeded ? "above cap" : std::to_string(ord.order)),
                      ""};
          }
        }
        return {Status::Verified,
                "orders equal 3 for all successive pairs, including last*first, n=4,5,6", ""};
      }});

  // C7: conjugation by T = r32^-1 r42 multiplies r13 by powers of r12.
  claims.push_back(Claim{
      "C7", "relation", "free-group",
      "T^-p r13 T^p = r13 r12^p for T = r32^-1 r42, p = 1..4, rank 4",
      kDefaultClosureCap, true, [](const ClaimContext& ctx) -> ClaimOutcome {
        const int n = 4;
        FreeAut t = eval_product<FreeAut>(
            {gen(GeneratorSymbol::right_multiply(3, 2), n).inverse(),
             gen(GeneratorSymbol::right_multiply(4, 2), n)},
            ctx.conv);
        FreeAut rho13 = gen(GeneratorSymbol::right_multiply(1, 3), n);
        FreeAut rho12 = gen(GeneratorSymbol::right_multiply(1, 2), n);
        for (long p = 1; p <= 4; ++p) {
          std::vector<FreeAut> lhs, rhs;
          for (long q = 0; q < p; ++q) lhs.push_back(t.inverse());
          lhs.push_back(rho13);
          for (long q = 0; q < p; ++q) lhs.push_back(t);
          rhs.push_back(rho13);
          for (long q = 0; q < p; ++q) rhs.push_back(rho12);
          if (eval_product(lhs, ctx.conv) != eval_product(rhs, ctx.conv))
            return {Status::Refuted, "fails at p=" + std::to_string(p), ""};
        }
        return {Status::Verified, "conjugation identity holds for p=1..4", ""};
      }});

  // C8: the two one-sided multiplications on the same letter commute.
  claims.push_back(Claim{
      "C8", "relation", "free-group", "r12 commutes with l12", kDefaultClosureCap, false,
      [](const ClaimContext&) -> ClaimOutcome {
        const int n = 2;
        FreeAut rho = gen(GeneratorSymbol::right_multiply(1, 2), n);
        FreeAut lam = gen(GeneratorSymbol::left_multiply(1, 2), n);
        FreeAut a = compose(rho, lam), b = compose(lam, rho);
        FreeWord expect = expr::parse_word("x2 x1 x2");
        if (a != b || a.image(1) != expect)
          return {Status::Refuted, "r12 l12 = " + a.str() + ", l12 r12 = " + b.str(), ""};
        return {Status::Verified, "both orders send x1 to x2 x1 x2", ""};
      }});

  // C9: rank-2 generating set checks.
  claims.push_back(Claim{
      "C9", "finiteness", "free-group",
      "(r12 e2)^2 = 1; the pair with e1 e2 (12) generates a finite group; "
      "the pair with e2 generates an infinite dihedral group",
      kDefaultClosureCap, false, [](const ClaimContext& ctx) -> ClaimOutcome {
        const int n = 2;
        FreeAut phi = eval_product<FreeAut>(
            {gen(GeneratorSymbol::right_multiply(1, 2), n), gen(GeneratorSymbol::invert(2), n)},
            ctx.conv);
        FreeAut psi = eval_product<FreeAut>(
            {gen(GeneratorSymbol::invert(1), n), gen(GeneratorSymbol::invert(2), n),
             gen(GeneratorSymbol::swap(1, 2), n)},
            ctx.conv);
        fg::OrderResult ord = fg::order_bounded(phi, 8);
        if (ord.exceeded || ord.order != 2)
          return {Status::Refuted, "(r12 e2) does not square to the identity", ""};
        ClosureOutcome fin = subgroup_closure<FreeAut>({phi, psi}, ctx.cap);
        if (fin.exceeded) return {Status::ExceededCap, "pair with e1 e2 (12) exceeded cap", ""};
        if (fin.order != 6)
          return {Status::Refuted,
                  "pair with e1 e2 (12) has order " + std::to_string(fin.order) +
                      ", expected the pinned value 6",
                  ""};
        std::uint64_t infinite_cap = std::min<std::uint64_t>(ctx.cap, 1000);
        ClosureOutcome inf = subgroup_closure<FreeAut>(
            {phi, gen(GeneratorSymbol::invert(2), n)}, infinite_cap);
        if (!inf.exceeded)
          return {Status::Refuted,
                  "pair with e2 closed at order " + std::to_string(inf.order) +
                      " but must be infinite dihedral",
                  ""};
        return {Status::Verified,
                "order 2; |<r12 e2, e1 e2 (12)>| = 6; <r12 e2, e2> exceeds cap " +
                    std::to_string(infinite_cap),
                ""};
      }});

  // C10: the word-parameterized conjugation identity at rank 5.
  claims.push_back(Claim{
      "C10", "relation", "free-group",
      "T^-1 r24 T = r24 rw(2,w) for T: x4 -> x4 w^-1, x5 -> x5 w; "
      "w in {x1, x3, x1 x3, x1 x3^-1}, rank 5",
      kDefaultClosureCap, true, [](const ClaimContext& ctx) -> ClaimOutcome {
        const int n = 5;
        for (const char* wtext : {"x1", "x3", "x1 x3", "x1 x3^-1"}) {
          FreeWord w = expr::parse_word(wtext);
          FreeAut t = t_conjugator(w, n);
          FreeAut rho24 = gen(GeneratorSymbol::right_multiply(2, 4), n);
          FreeAut rho2w = gen(GeneratorSymbol::right_multiply_word(2, w), n);
          FreeAut lhs = eval_product<FreeAut>({t.inverse(), rho24, t}, ctx.conv);
          FreeAut rhs = eval_product<FreeAut>({rho24, rho2w}, ctx.conv);
          if (lhs != rhs)
            return {Status::Refuted, std::string("fails at w = ") + wtext, ""};
        }
        return {Status::Verified, "identity holds for all four parameter words", ""};
      }});

  // C11: every 2-subset of S and of S1 generates a finite group.
  claims.push_back(Claim{
      "C11", "finiteness", "free-group",
      "any 2 elements of S = {e2 r12, e1 (23), e1 e2 (12), (34), ..., (n-1,n), e_n} "
      "or of S1 = {e2 r12, e3, e1 (23), e1 e2 (12)} generate a finite group; n = 4,5",
      kDefaultClosureCap, false, [](const ClaimContext& ctx) -> ClaimOutcome {
        std::string miss;
        std::uint64_t pairs = 0;
        for (int n = 4; n <= 5; ++n) {
          std::vector<FreeAut> s = pairwise_set(n, ctx.conv);
          if (!all_pairs_finite(s, ctx.cap, miss))
            return {Status::ExceededCap, "n=" + std::to_string(n) + " S: " + miss, ""};
          pairs += s.size() * (s.size() - 1) / 2;
          std::vector<FreeAut> s1 = pairwise_set_small(n, ctx.conv);
          if (!all_pairs_finite(s1, ctx.cap, miss))
            return {Status::ExceededCap, "n=" + std::to_string(n) + " S1: " + miss, ""};
          pairs += s1.size() * (s1.size() - 1) / 2;
        }
        return {Status::Verified, std::to_string(pairs) + " pairs all closed to finite groups",
                ""};
      }});

  // C12: small subsets of the T-extended swap set generate finite groups.
  claims.push_back(Claim{
      "C12", "finiteness", "free-group",
      "every (n-4)-subset of {T (45), (56), ..., (n-1,n), (2,n), (4,n)} generates a "
      "finite group, w = x1 x3; n = 5,6",
      kDefaultClosureCap, false, [](const ClaimContext& ctx) -> ClaimOutcome {
        FreeWord w = expr::parse_word("x1 x3");
        std::uint64_t subsets = 0;
        for (int n = 5; n <= 6; ++n) {
          std::vector<FreeAut> set;
          set.push_back(eval_product<FreeAut>(
              {t_conjugator(w, n), gen(GeneratorSymbol::swap(4, 5), n)}, ctx.conv));
          for (int i = 5; i <= n - 1; ++i) set.push_back(gen(GeneratorSymbol::swap(i, i + 1), n));
          set.push_back(gen(GeneratorSymbol::swap(2, n), n));
          set.push_back(gen(GeneratorSymbol::swap(4, n), n));
          const int size = n - 4;
          std::vector<std::size_t> idx(static_cast<std::size_t>(size));
          for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
          while (true) {
            std::vector<FreeAut> subset;
            for (std::size_t k : idx) subset.push_back(set[k]);
            ClosureOutcome c = subgroup_closure(subset, ctx.cap);
            if (c.exceeded)
              return {Status::ExceededCap,
                      "n=" + std::to_string(n) + ": a " + std::to_string(size) +
                          "-subset exceeded the cap",
                      ""};
            ++subsets;
            int pos = size - 1;
            while (pos >= 0 && idx[pos] == set.size() - size + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
          }
        }
        return {Status::Verified, std::to_string(subsets) + " subsets all closed to finite groups",
                ""};
      }});

  // C13: the catalog verdicts the other claims rely on.
  claims.push_back(Claim{
      "C13", "classification", "coxeter",
      "the (4,3,...,3,4) path of rank n+1 is infinite with sphericity n-1 (n = 2,3,4); "
      "the unlabeled cycle on k vertices is infinite with sphericity k-2 and A-type "
      "proper subpaths (k = 3,4,5)",
      kDefaultClosureCap, false, [](const ClaimContext&) -> ClaimOutcome {
        for (int n = 2; n <= 4; ++n) {
          cox::CoxeterMatrix m = cox::signed_permutation_path_matrix(n);
          if (cox::classify(m).finite)
            return {Status::Refuted, "path n=" + std::to_string(n) + " classified finite", ""};
          cox::Sphericity sp = cox::sphericity(m);
          if (sp.full_rank || sp.level != n - 1)
            return {Status::Refuted,
                    "path n=" + std::to_string(n) + " sphericity " + std::to_string(sp.level),
                    ""};
        }
        for (int k = 3; k <= 5; ++k) {
          cox::CoxeterMatrix m = cox::cycle_matrix(k);
          if (cox::classify(m).finite)
            return {Status::Refuted, "cycle k=" + std::to_string(k) + " classified finite", ""};
          cox::Sphericity sp = cox::sphericity(m);
          if (sp.full_rank || sp.level != k - 2)
            return {Status::Refuted,
                    "cycle k=" + std::to_string(k) + " sphericity " + std::to_string(sp.level),
                    ""};
          for (int drop = 0; drop < k; ++drop) {
            std::vector<int> keep;
            for (int v = 0; v < k; ++v)
              if (v != drop) keep.push_back(v);
            for (const auto& comp : cox::classify(m.principal_submatrix(keep)).components)
              if (comp.label[0] != 'A')
                return {Status::Refuted,
                        "cycle k=" + std::to_string(k) + " subpath classified " + comp.label, ""};
          }
        }
        return {Status::Verified, "path and cycle verdicts match the catalog at every size", ""};
      }});

  return claims;
}

}  // namespace certify::run
