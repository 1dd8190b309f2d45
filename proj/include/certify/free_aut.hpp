#pragma once

// Automorphisms of the free group F_n, stored as reduced basis images
// together with an explicit inverse. Elements only ever arise from
// generator symbols and composition, so the inverse is available by
// construction and no general inversion algorithm is needed.

#include "certify/free_word.hpp"

#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace certify::fg {

class FreeAut {
 public:
  static FreeAut identity(int rank) {
    FreeAut f;
    f.rank_ = check_rank(rank);
    for (int i = 1; i <= rank; ++i) f.img_.push_back(FreeWord::generator(i));
    f.inv_ = f.img_;
    f.provenance_ = "id";
    return f;
  }

  // Builds from explicit forward and inverse images and verifies on the
  // basis that they really are mutually inverse.
  static FreeAut from_images(int rank, std::vector<FreeWord> img, std::vector<FreeWord> inv,
                             std::string provenance) {
    FreeAut f;
    f.rank_ = check_rank(rank);
    if (static_cast<int>(img.size()) != rank || static_cast<int>(inv.size()) != rank)
      throw std::invalid_argument("image count does not match rank");
    for (const FreeWord& w : img)
      if (w.max_generator() > rank) throw std::invalid_argument("image uses letter beyond rank");
    for (const FreeWord& w : inv)
      if (w.max_generator() > rank) throw std::invalid_argument("inverse uses letter beyond rank");
    f.img_ = std::move(img);
    f.inv_ = std::move(inv);
    f.provenance_ = std::move(provenance);
    for (int i = 1; i <= rank; ++i) {
      if (f.apply(f.apply_inverse(FreeWord::generator(i))) != FreeWord::generator(i))
        throw std::invalid_argument("images and inverse images are not mutually inverse");
    }
    return f;
  }

  int rank() const { return rank_; }
  const FreeWord& image(int i) const { return img_.at(static_cast<std::size_t>(i) - 1); }
  const FreeWord& inverse_image(int i) const {
    return inv_.at(static_cast<std::size_t>(i) - 1);
  }
  const std::string& provenance() const { return provenance_; }

  // Homomorphic extension of the basis images; the result is reduced.
  FreeWord apply(const FreeWord& w) const { return apply_words(img_, w); }
  FreeWord apply_inverse(const FreeWord& w) const { return apply_words(inv_, w); }

  FreeAut inverse() const {
    FreeAut f;
    f.rank_ = rank_;
    f.img_ = inv_;
    f.inv_ = img_;
    f.provenance_ = compose_label(provenance_, "", true);
    return f;
  }

  bool is_identity() const {
    for (int i = 1; i <= rank_; ++i)
      if (image(i) != FreeWord::generator(i)) return false;
    return true;
  }

  bool operator==(const FreeAut& o) const { return rank_ == o.rank_ && img_ == o.img_; }
  bool operator!=(const FreeAut& o) const { return !(*this == o); }

  std::size_t total_image_length() const {
    std::size_t n = 0;
    for (const FreeWord& w : img_) n += w.length();
    return n;
  }

  std::string key() const {
    std::string s;
    for (const FreeWord& w : img_) s += w.str() + ";";
    return s;
  }

  std::string str() const {
    std::string s;
    for (int i = 1; i <= rank_; ++i) {
      if (!s.empty()) s += ", ";
      s += "x" + std::to_string(i) + "->" + image(i).str();
    }
    return s;
  }

  // compose(f, g): apply g first, then f.
  friend FreeAut compose(const FreeAut& f, const FreeAut& g) {
    if (f.rank_ != g.rank_) throw std::invalid_argument("rank mismatch in compose");
    FreeAut r;
    r.rank_ = f.rank_;
    r.img_.reserve(f.rank_);
    r.inv_.reserve(f.rank_);
    for (int i = 1; i <= f.rank_; ++i) r.img_.push_back(f.apply(g.image(i)));
    // (f o g)^{-1} = g^{-1} o f^{-1}
    for (int i = 1; i <= f.rank_; ++i) r.inv_.push_back(g.apply_inverse(f.inverse_image(i)));
    r.provenance_ = compose_label(f.provenance_, g.provenance_, false);
    return r;
  }

 private:
  static int check_rank(int rank) {
    if (rank < 1) throw std::invalid_argument("rank must be >= 1");
    return rank;
  }

  static FreeWord apply_words(const std::vector<FreeWord>& images, const FreeWord& w) {
    FreeWord out;
    for (int l : w.letters()) {
      const FreeWord& im = images.at(static_cast<std::size_t>(std::abs(l)) - 1);
      out = out * (l > 0 ? im : im.inverse());
    }
    return out;
  }

  static std::string compose_label(const std::string& a, const std::string& b, bool inverse) {
    std::string s = inverse ? "(" + a + ")^-1" : a + " " + b;
    constexpr std::size_t kMax = 120;
    if (s.size() > kMax) s = s.substr(0, kMax) + "...";
    return s;
  }

  int rank_ = 0;
  std::vector<FreeWord> img_, inv_;
  std::string provenance_;
};

// ---------------------------------------------------------------------------
// Generator symbols

struct GeneratorSymbol {
  enum class Kind {
    RightMultiply,      // a_i -> a_i a_j
    LeftMultiply,       // a_i -> a_j a_i
    Invert,             // a_i -> a_i^{-1}
    Swap,               // a_i <-> a_j
    RightMultiplyWord,  // a_i -> a_i w, w avoiding a_i
    WordConjugator      // a_{i_k} -> a_{i_k} w_k^{s_k} for listed k
  };

  Kind kind{};
  int i = 0, j = 0;
  FreeWord w;
  std::vector<std::tuple<int, FreeWord, int>> pairs;  // (index, word, sign)

  static GeneratorSymbol make(Kind kind, int i = 0, int j = 0) {
    GeneratorSymbol s;
    s.kind = kind;
    s.i = i;
    s.j = j;
    return s;
  }
  static GeneratorSymbol right_multiply(int i, int j) { return make(Kind::RightMultiply, i, j); }
  static GeneratorSymbol left_multiply(int i, int j) { return make(Kind::LeftMultiply, i, j); }
  static GeneratorSymbol invert(int i) { return make(Kind::Invert, i); }
  static GeneratorSymbol swap(int i, int j) { return make(Kind::Swap, i, j); }
  static GeneratorSymbol right_multiply_word(int i, FreeWord w) {
    GeneratorSymbol s = make(Kind::RightMultiplyWord, i);
    s.w = std::move(w);
    return s;
  }
  static GeneratorSymbol word_conjugator(std::vector<std::tuple<int, FreeWord, int>> pairs) {
    GeneratorSymbol s = make(Kind::WordConjugator);
    s.pairs = std::move(pairs);
    return s;
  }

  std::string label() const {
    switch (kind) {
      case Kind::RightMultiply:
        return "r(" + std::to_string(i) + "," + std::to_string(j) + ")";
      case Kind::LeftMultiply:
        return "l(" + std::to_string(i) + "," + std::to_string(j) + ")";
      case Kind::Invert:
        return "e(" + std::to_string(i) + ")";
      case Kind::Swap:
        return "s(" + std::to_string(i) + "," + std::to_string(j) + ")";
      case Kind::RightMultiplyWord:
        return "rw(" + std::to_string(i) + ",\"" + w.str() + "\")";
      case Kind::WordConjugator: {
        std::string s = "conj(";
        bool first = true;
        for (const auto& [idx, word, sign] : pairs) {
          if (!first) s += ";";
          first = false;
          s += std::to_string(idx) + ",\"" + word.str() + "\"," + std::to_string(sign);
        }
        return s + ")";
      }
    }
    return "?";
  }
};

inline FreeAut make_generator(const GeneratorSymbol& sym, int rank) {
  using Kind = GeneratorSymbol::Kind;
  auto need_index = [&](int idx) {
    if (idx < 1 || idx > rank) throw std::invalid_argument("generator index out of range");
  };
  std::vector<FreeWord> img, inv;
  for (int k = 1; k <= rank; ++k) {
    img.push_back(FreeWord::generator(k));
    inv.push_back(FreeWord::generator(k));
  }
  auto at = [](std::vector<FreeWord>& v, int idx) -> FreeWord& {
    return v[static_cast<std::size_t>(idx) - 1];
  };

  switch (sym.kind) {
    case Kind::RightMultiply:
      need_index(sym.i);
      need_index(sym.j);
      if (sym.i == sym.j) throw std::invalid_argument("indices must be distinct");
      at(img, sym.i) = FreeWord::generator(sym.i) * FreeWord::generator(sym.j);
      at(inv, sym.i) = FreeWord::generator(sym.i) * FreeWord::generator(sym.j, -1);
      break;
    case Kind::LeftMultiply:
      need_index(sym.i);
      need_index(sym.j);
      if (sym.i == sym.j) throw std::invalid_argument("indices must be distinct");
      at(img, sym.i) = FreeWord::generator(sym.j) * FreeWord::generator(sym.i);
      at(inv, sym.i) = FreeWord::generator(sym.j, -1) * FreeWord::generator(sym.i);
      break;
    case Kind::Invert:
      need_index(sym.i);
      at(img, sym.i) = FreeWord::generator(sym.i, -1);
      at(inv, sym.i) = FreeWord::generator(sym.i, -1);
      break;
    case Kind::Swap:
      need_index(sym.i);
      need_index(sym.j);
      if (sym.i == sym.j) throw std::invalid_argument("indices must be distinct");
      at(img, sym.i) = FreeWord::generator(sym.j);
      at(img, sym.j) = FreeWord::generator(sym.i);
      at(inv, sym.i) = FreeWord::generator(sym.j);
      at(inv, sym.j) = FreeWord::generator(sym.i);
      break;
    case Kind::RightMultiplyWord:
      need_index(sym.i);
      if (sym.w.max_generator() > rank)
        throw std::invalid_argument("word uses letter beyond rank");
      if (sym.w.uses_generator(sym.i))
        throw std::invalid_argument("right-multiplier word must avoid the moved generator");
      at(img, sym.i) = FreeWord::generator(sym.i) * sym.w;
      at(inv, sym.i) = FreeWord::generator(sym.i) * sym.w.inverse();
      break;
    case Kind::WordConjugator: {
      std::vector<int> moved;
      for (const auto& [idx, word, sign] : sym.pairs) moved.push_back(idx);
      for (const auto& [idx, word, sign] : sym.pairs) {
        need_index(idx);
        if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
        if (word.max_generator() > rank)
          throw std::invalid_argument("word uses letter beyond rank");
        for (int mv : moved)
          if (word.uses_generator(mv))
            throw std::invalid_argument("conjugator words must avoid every moved generator");
        FreeWord& dst = at(img, idx);
        if (dst != FreeWord::generator(idx))
          throw std::invalid_argument("conjugator indices must be distinct");
        dst = FreeWord::generator(idx) * power(word, sign);
        at(inv, idx) = FreeWord::generator(idx) * power(word, -sign);
      }
      break;
    }
  }
  return FreeAut::from_images(rank, std::move(img), std::move(inv), sym.label());
}

// ---------------------------------------------------------------------------
// Bounded order computation

struct OrderResult {
  bool exceeded = false;
  long order = 0;  // valid when !exceeded

  bool operator==(const OrderResult& o) const {
    return exceeded == o.exceeded && (exceeded || order == o.order);
  }
};

// Smallest k <= cap with f^k = id. Image growth is monitored: once the total
// basis-image length passes 10*cap the element cannot return to the identity
// within the budget that matters here, and the scan stops early.
inline OrderResult order_bounded(const FreeAut& f, long cap) {
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  FreeAut g = f;
  for (long k = 1; k <= cap; ++k) {
    if (g.is_identity()) return {false, k};
    if (g.total_image_length() > static_cast<std::size_t>(10 * cap)) return {true, 0};
    g = compose(f, g);
  }
  return {true, 0};
}

}  // namespace certify::fg
