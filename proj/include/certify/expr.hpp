#pragma once

// Text syntaxes for claim files.
//
// free-group factors (whitespace separated, each may end in ^-1):
//   r(i,j)   right multiply: a_i -> a_i a_j
//   l(i,j)   left multiply:  a_i -> a_j a_i
//   e(i)     invert a_i
//   s(i,j)   swap a_i and a_j
//   rw(i,"x1 x3^-1")            a_i -> a_i w
//   conj(4,"x1 x3",-1;5,"x1 x3",1)   a_4 -> a_4 w^-1, a_5 -> a_5 w
//
// matrix factors (separated by *, each may end in ^-1):
//   E(i,j,poly,n)  I(n)  Dg(s1,...,sn)  P(i j k,n)  neg(n)
//   poly: integer combinations of space-separated indeterminate names,
//   e.g. "x", "r s", "2 - 3 r s"
//
// affine factors (separated by *, each may end in ^-1):
//   t(q1,...,qn)  sg(i)  p(i,j)    with exact rational q like 1/2

#include "certify/affine.hpp"
#include "certify/engine.hpp"
#include "certify/free_aut.hpp"
#include "certify/nc_poly.hpp"
#include "certify/ring_matrix.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace certify::expr {

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Splits on sep at nesting depth zero, honoring parentheses and quotes.
inline std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  bool quoted = false;
  for (char c : s) {
    if (c == '"') quoted = !quoted;
    if (!quoted) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && c == sep) {
        out.push_back(cur);
        cur.clear();
        continue;
      }
    }
    cur += c;
  }
  out.push_back(cur);
  return out;
}

// Splits "name(args)[^-1]" into pieces.
struct Call {
  std::string name;
  std::vector<std::string> args;
  bool inverted = false;
};

inline Call parse_call(std::string token) {
  token = trim(token);
  Call call;
  if (token.size() >= 3 && token.ends_with("^-1")) {
    call.inverted = true;
    token = trim(token.substr(0, token.size() - 3));
  }
  auto open = token.find('(');
  if (open == std::string::npos || token.back() != ')')
    throw std::invalid_argument("expected name(...): '" + token + "'");
  call.name = trim(token.substr(0, open));
  std::string inner = token.substr(open + 1, token.size() - open - 2);
  if (!trim(inner).empty())
    for (std::string& a : split_top(inner, ',')) call.args.push_back(trim(a));
  else
    call.args = {};
  if (!trim(inner).empty() && call.args.empty()) call.args.push_back(trim(inner));
  return call;
}

inline int parse_int(const std::string& s) {
  std::size_t pos = 0;
  int v = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad integer: '" + s + "'");
  return v;
}

inline std::string unquote(const std::string& s) {
  std::string t = trim(s);
  if (t.size() < 2 || t.front() != '"' || t.back() != '"')
    throw std::invalid_argument("expected quoted word: '" + s + "'");
  return t.substr(1, t.size() - 2);
}

inline std::vector<std::string> whitespace_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  bool quoted = false;
  for (char c : s) {
    if (c == '"') quoted = !quoted;
    if (!quoted) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && std::isspace(static_cast<unsigned char>(c))) {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
        continue;
      }
    }
    cur += c;
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Words: "x1 x3^-1"

inline fg::FreeWord parse_word(const std::string& text) {
  std::vector<int> letters;
  for (std::string tok : detail::whitespace_tokens(text)) {
    int sign = 1;
    if (tok.size() >= 3 && tok.ends_with("^-1")) {
      sign = -1;
      tok = tok.substr(0, tok.size() - 3);
    }
    if (tok.size() < 2 || tok[0] != 'x')
      throw std::invalid_argument("bad word letter: '" + tok + "'");
    letters.push_back(sign * detail::parse_int(tok.substr(1)));
  }
  return fg::FreeWord::from_letters(letters);
}

// ---------------------------------------------------------------------------
// Free-group factor lists

inline fg::FreeAut parse_free_factor(const std::string& token, int rank) {
  using detail::parse_call;
  detail::Call c = parse_call(token);
  fg::GeneratorSymbol sym = [&]() {
    if (c.name == "r" && c.args.size() == 2)
      return fg::GeneratorSymbol::right_multiply(detail::parse_int(c.args[0]),
                                                 detail::parse_int(c.args[1]));
    if (c.name == "l" && c.args.size() == 2)
      return fg::GeneratorSymbol::left_multiply(detail::parse_int(c.args[0]),
                                                detail::parse_int(c.args[1]));
    if (c.name == "e" && c.args.size() == 1)
      return fg::GeneratorSymbol::invert(detail::parse_int(c.args[0]));
    if (c.name == "s" && c.args.size() == 2)
      return fg::GeneratorSymbol::swap(detail::parse_int(c.args[0]),
                                       detail::parse_int(c.args[1]));
    if (c.name == "rw" && c.args.size() == 2)
      return fg::GeneratorSymbol::right_multiply_word(detail::parse_int(c.args[0]),
                                                      parse_word(detail::unquote(c.args[1])));
    if (c.name == "conj") {
      // args were split on ','; regroup on ';' from the raw argument text
      std::vector<std::tuple<int, fg::FreeWord, int>> pairs;
      std::string raw;
      for (std::size_t i = 0; i < c.args.size(); ++i) {
        if (i) raw += ",";
        raw += c.args[i];
      }
      for (const std::string& grp : detail::split_top(raw, ';')) {
        auto parts = detail::split_top(grp, ',');
        if (parts.size() != 3)
          throw std::invalid_argument("conj expects index,\"word\",sign groups");
        pairs.emplace_back(detail::parse_int(detail::trim(parts[0])),
                           parse_word(detail::unquote(parts[1])),
                           detail::parse_int(detail::trim(parts[2])));
      }
      return fg::GeneratorSymbol::word_conjugator(std::move(pairs));
    }
    throw std::invalid_argument("unknown free-group factor: '" + token + "'");
  }();
  fg::FreeAut out = fg::make_generator(sym, rank);
  return c.inverted ? out.inverse() : out;
}

inline std::vector<fg::FreeAut> parse_free_factors(const std::string& text, int rank) {
  std::vector<fg::FreeAut> out;
  for (const std::string& tok : detail::whitespace_tokens(text))
    out.push_back(parse_free_factor(tok, rank));
  if (out.empty()) throw std::invalid_argument("empty free-group expression");
  return out;
}

// ---------------------------------------------------------------------------
// Noncommutative polynomials

inline ncring::NcPoly parse_poly(const std::string& text) {
  using ncring::NcPoly;
  std::string s = detail::trim(text);
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  NcPoly acc;
  std::size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size()) {
      char c = s[i];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '+') {
        ++i;
      } else if (c == '-') {
        sign = -sign;
        ++i;
      } else {
        break;
      }
    }
    if (i >= s.size()) break;
    Int coeff = 1;
    bool saw_digit = false;
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::string num;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num += s[i++];
      coeff = Int(num);
      saw_digit = true;
    }
    std::vector<std::string> names;
    while (true) {
      while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*'))
        ++i;
      if (i >= s.size() || !std::isalpha(static_cast<unsigned char>(s[i]))) break;
      std::string name;
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        name += s[i++];
      names.push_back(name);
    }
    if (!saw_digit && names.empty())
      throw std::invalid_argument("bad polynomial term in '" + text + "'");
    NcPoly term = NcPoly::constant(coeff * sign);
    for (const std::string& n : names) term = term * NcPoly::indeterminate(n);
    acc = acc + term;
    any = true;
  }
  if (!any) throw std::invalid_argument("empty polynomial");
  return acc;
}

// ---------------------------------------------------------------------------
// Matrix factor lists

inline ncring::MatrixElement parse_matrix_factor(const std::string& token) {
  using ncring::MatrixElement;
  detail::Call c = detail::parse_call(token);
  MatrixElement out = [&]() {
    if (c.name == "E" && c.args.size() == 4) {
      int n = detail::parse_int(c.args[3]);
      if (n < 1) throw std::invalid_argument("matrix size must be >= 1");
      return MatrixElement::elementary(detail::parse_int(c.args[0]),
                                       detail::parse_int(c.args[1]), parse_poly(c.args[2]),
                                       static_cast<std::size_t>(n));
    }
    if (c.name == "I" && c.args.size() == 1)
      return MatrixElement::identity(static_cast<std::size_t>(detail::parse_int(c.args[0])));
    if (c.name == "Dg" && !c.args.empty()) {
      std::vector<int> signs;
      for (const std::string& a : c.args) signs.push_back(detail::parse_int(a));
      return MatrixElement::sign_diag(signs);
    }
    if (c.name == "P" && c.args.size() == 2) {
      std::vector<int> cyc;
      for (const std::string& t : detail::whitespace_tokens(c.args[0]))
        cyc.push_back(detail::parse_int(t));
      int n = detail::parse_int(c.args[1]);
      if (n < 1 || cyc.size() < 2) throw std::invalid_argument("bad cycle");
      std::vector<std::size_t> perm(static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
        if (from < 1 || from > n || to < 1 || to > n)
          throw std::invalid_argument("cycle index out of range");
        perm[static_cast<std::size_t>(from) - 1] = static_cast<std::size_t>(to) - 1;
      }
      return MatrixElement::permutation(perm);
    }
    if (c.name == "neg" && c.args.size() == 1)
      return MatrixElement::scalar_neg(static_cast<std::size_t>(detail::parse_int(c.args[0])));
    throw std::invalid_argument("unknown matrix factor: '" + token + "'");
  }();
  return c.inverted ? out.inverted() : out;
}

inline std::vector<ncring::MatrixElement> parse_matrix_factors(const std::string& text) {
  std::vector<ncring::MatrixElement> out;
  for (const std::string& piece : detail::split_top(text, '*')) {
    std::string t = detail::trim(piece);
    if (t.empty()) throw std::invalid_argument("empty matrix factor");
    out.push_back(parse_matrix_factor(t));
  }
  if (out.empty()) throw std::invalid_argument("empty matrix expression");
  std::size_t n = out.front().value.size();
  for (const auto& e : out)
    if (e.value.size() != n) throw std::invalid_argument("matrix sizes disagree");
  return out;
}

// ---------------------------------------------------------------------------
// Affine factor lists

inline aff::AffineIsometry parse_affine_factor(const std::string& token, int dim) {
  using aff::AffineIsometry;
  detail::Call c = detail::parse_call(token);
  AffineIsometry out = [&]() {
    if (c.name == "t") {
      if (static_cast<int>(c.args.size()) != dim)
        throw std::invalid_argument("translation arity must match dimension");
      aff::Point v;
      for (const std::string& a : c.args) v.push_back(parse_rat(a));
      return AffineIsometry::translation(std::move(v));
    }
    if (c.name == "sg" && c.args.size() == 1)
      return AffineIsometry::linear(
          aff::SignedPermutation::flip(detail::parse_int(c.args[0]), dim));
    if (c.name == "p" && c.args.size() == 2)
      return AffineIsometry::linear(aff::SignedPermutation::transposition(
          detail::parse_int(c.args[0]), detail::parse_int(c.args[1]), dim));
    throw std::invalid_argument("unknown affine factor: '" + token + "'");
  }();
  return c.inverted ? out.inverse() : out;
}

inline std::vector<aff::AffineIsometry> parse_affine_factors(const std::string& text, int dim) {
  std::vector<aff::AffineIsometry> out;
  for (const std::string& piece : detail::split_top(text, '*')) {
    std::string t = detail::trim(piece);
    if (t.empty()) throw std::invalid_argument("empty affine factor");
    out.push_back(parse_affine_factor(t, dim));
  }
  if (out.empty()) throw std::invalid_argument("empty affine expression");
  return out;
}

}  // namespace certify::expr
