#pragma once

// Free noncommutative polynomials Z<x_1,...,x_k>: finite maps from monomials
// (sequences of indeterminate names) to nonzero integer coefficients. The map
// itself is the normal form; monomials are ordered by length, then
// lexicographically, which fixes the serialization.

#include "certify/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace certify::ncring {

using Monomial = std::vector<std::string>;

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class NcPoly {
 public:
  NcPoly() = default;  // zero

  static NcPoly constant(Int c) {
    NcPoly p;
    if (c != 0) p.terms_[{}] = std::move(c);
    return p;
  }
  static NcPoly one() { return constant(1); }
  static NcPoly indeterminate(const std::string& name) {
    NcPoly p;
    p.terms_[{name}] = 1;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
  }
  std::size_t term_count() const { return terms_.size(); }

  NcPoly operator+(const NcPoly& o) const {
    NcPoly r = *this;
    for (const auto& [mono, coeff] : o.terms_) r.add_term(mono, coeff);
    return r;
  }

  NcPoly operator-() const {
    NcPoly r;
    for (const auto& [mono, coeff] : terms_) r.terms_[mono] = -coeff;
    return r;
  }

  NcPoly operator-(const NcPoly& o) const { return *this + (-o); }

  // Products distribute over sums with factor order preserved.
  NcPoly operator*(const NcPoly& o) const {
    NcPoly r;
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) {
        Monomial m = ma;
        m.insert(m.end(), mb.begin(), mb.end());
        r.add_term(m, ca * cb);
      }
    return r;
  }

  NcPoly scaled(const Int& c) const {
    NcPoly r;
    if (c == 0) return r;
    for (const auto& [mono, coeff] : terms_) r.terms_[mono] = coeff * c;
    return r;
  }

  bool operator==(const NcPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const NcPoly& o) const { return !(*this == o); }

  const std::map<Monomial, Int, MonomialLess>& terms() const { return terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [mono, coeff] : terms_) {
      Int c = coeff;
      if (s.empty()) {
        if (c < 0) {
          s += "-";
          c = -c;
        }
      } else {
        s += c < 0 ? " - " : " + ";
        if (c < 0) c = -c;
      }
      std::string names;
      for (const auto& name : mono) {
        if (!names.empty()) names += " ";
        names += name;
      }
      if (names.empty())
        s += c.get_str();
      else if (c == 1)
        s += names;
      else
        s += c.get_str() + " " + names;
    }
    return s;
  }

 private:
  void add_term(const Monomial& mono, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
      terms_[mono] = c;
      return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  std::map<Monomial, Int, MonomialLess> terms_;
};

inline NcPoly operator*(const Int& c, const NcPoly& p) { return p.scaled(c); }

}  // namespace certify::ncring
