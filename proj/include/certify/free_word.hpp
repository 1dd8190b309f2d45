#pragma once

// Freely reduced words over a free-group basis a_1, a_2, ... Letters are
// nonzero ints: +i is a_i, -i is a_i^{-1}. Storage is a flat array with
// stack-style reduction; desk-scale words stay short.

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace certify::fg {

class FreeWord {
 public:
  FreeWord() = default;

  static FreeWord generator(int i, int sign = +1) {
    if (i < 1) throw std::invalid_argument("generator index must be >= 1");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
    FreeWord w;
    w.letters_.push_back(sign * i);
    return w;
  }

  // Reduces an arbitrary letter sequence to its normal form.
  static FreeWord from_letters(const std::vector<int>& raw) {
    FreeWord w;
    for (int l : raw) w.push_reduce(l);
    return w;
  }

  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }
  const std::vector<int>& letters() const { return letters_; }

  int max_generator() const {
    int m = 0;
    for (int l : letters_) m = std::max(m, std::abs(l));
    return m;
  }

  FreeWord operator*(const FreeWord& o) const {
    FreeWord r = *this;
    for (int l : o.letters_) r.push_reduce(l);
    return r;
  }

  FreeWord inverse() const {
    FreeWord r;
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      r.letters_.push_back(-*it);
    return r;  // already reduced: reversal of a reduced word
  }

  bool uses_generator(int i) const {
    for (int l : letters_)
      if (std::abs(l) == i) return true;
    return false;
  }

  bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }
  bool operator!=(const FreeWord& o) const { return !(*this == o); }
  bool operator<(const FreeWord& o) const { return letters_ < o.letters_; }

  std::string str() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (int l : letters_) {
      if (!s.empty()) s += ' ';
      s += "x" + std::to_string(std::abs(l));
      if (l < 0) s += "^-1";
    }
    return s;
  }

 private:
  void push_reduce(int l) {
    if (l == 0) throw std::invalid_argument("letter 0");
    if (!letters_.empty() && letters_.back() == -l)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }

  std::vector<int> letters_;
};

// w^k, k may be negative
inline FreeWord power(const FreeWord& w, long k) {
  FreeWord base = k < 0 ? w.inverse() : w;
  long reps = k < 0 ? -k : k;
  FreeWord out;
  for (long i = 0; i < reps; ++i) out = out * base;
  return out;
}

}  // namespace certify::fg
