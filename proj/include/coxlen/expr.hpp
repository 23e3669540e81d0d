// Text syntax for group elements: t[c1,...,cn] for translations in coroot
// lattice coordinates, r(p,i) for the reflection with 1-based positive root
// index p and integer offset i, products joined by '*' with the rightmost
// factor applied first, and 'e' for the identity. Printing emits the normal
// form: translation part first, then a minimal factorization of the linear
// part.
#pragma once

#include "coxlen/length.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace coxlen {

inline std::string print_reflection(const AffineReflection& r) {
  return "r(" + std::to_string(r.root_index + 1) + "," +
         std::to_string(r.offset) + ")";
}

inline std::string print_word(const ReflectionWord& word) {
  if (word.empty()) return "e";
  std::string out;
  for (const AffineReflection& r : word) {
    if (!out.empty()) out += "*";
    out += print_reflection(r);
  }
  return out;
}

inline std::string print_lattice(const std::vector<long long>& lambda) {
  std::string out = "t[";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(lambda[i]);
  }
  return out + "]";
}

inline std::string print_element(const RootSystem& rs, const AffineElement& w) {
  std::vector<long long> lambda = translation_lattice(rs, w);
  bool has_translation = false;
  for (long long c : lambda)
    if (c != 0) has_translation = true;
  ReflectionWord word = carter_factorization(rs, project(w));
  std::string out;
  if (has_translation) out = print_lattice(lambda);
  for (const AffineReflection& r : word) {
    if (!out.empty()) out += "*";
    out += print_reflection(r);
  }
  return out.empty() ? "e" : out;
}

namespace detail {

struct ExprParser {
  const RootSystem& rs;
  const std::string& text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& message) const {
    throw Error("parse error at position " + std::to_string(pos + 1) + ": " +
                message);
  }

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char ch) {
    skip_space();
    if (pos < text.size() && text[pos] == ch) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!eat(ch)) fail(std::string("expected '") + ch + "'");
  }

  long long parse_int() {
    skip_space();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == digits) {
      pos = start;
      fail("expected an integer");
    }
    return std::stoll(text.substr(start, pos - start));
  }

  AffineReflection parse_reflection() {
    expect('r');
    expect('(');
    std::size_t at = pos;
    long long p = parse_int();
    if (p < 1 || p > static_cast<long long>(rs.positive_roots().size())) {
      pos = at;
      fail("positive root index out of range 1.." +
           std::to_string(rs.positive_roots().size()));
    }
    expect(',');
    long long i = parse_int();
    expect(')');
    return {static_cast<int>(p - 1), i};
  }

  std::vector<long long> parse_bracketed_lattice() {
    expect('[');
    std::vector<long long> coords;
    coords.push_back(parse_int());
    while (eat(',')) coords.push_back(parse_int());
    expect(']');
    if (coords.size() != static_cast<std::size_t>(rs.rank()))
      fail("expected " + std::to_string(rs.rank()) +
           " lattice coordinates, got " + std::to_string(coords.size()));
    return coords;
  }

  AffineElement parse_term() {
    skip_space();
    if (pos >= text.size()) fail("expected a factor");
    char ch = text[pos];
    if (ch == 'e') {
      ++pos;
      return identity_element(rs);
    }
    if (ch == 't') {
      ++pos;
      return translation_element(rs, parse_bracketed_lattice());
    }
    if (ch == 'r') return reflection_to_element(rs, parse_reflection());
    fail("expected 'e', 't[...]' or 'r(p,i)'");
  }

  AffineElement parse_element() {
    AffineElement acc = parse_term();
    while (eat('*')) acc = compose(acc, parse_term());
    skip_space();
    if (pos != text.size()) fail("unexpected trailing input");
    return acc;
  }

  ReflectionWord parse_word() {
    ReflectionWord word;
    skip_space();
    if (pos < text.size() && text[pos] == 'e') {
      ++pos;
    } else {
      word.push_back(parse_reflection());
      while (eat('*')) word.push_back(parse_reflection());
    }
    skip_space();
    if (pos != text.size()) fail("unexpected trailing input");
    return word;
  }
};

}  // namespace detail

inline AffineElement parse_element(const RootSystem& rs, const std::string& text) {
  detail::ExprParser parser{rs, text};
  return parser.parse_element();
}

inline ReflectionWord parse_reflection_word(const RootSystem& rs,
                                            const std::string& text) {
  detail::ExprParser parser{rs, text};
  return parser.parse_word();
}

// Accepts "1,0,-2" or "[1,0,-2]".
inline std::vector<long long> parse_lattice(const RootSystem& rs,
                                            const std::string& text) {
  std::string wrapped = text;
  std::size_t first = wrapped.find_first_not_of(" \t");
  if (first == std::string::npos || wrapped[first] != '[')
    wrapped = "[" + wrapped + "]";
  detail::ExprParser parser{rs, wrapped};
  auto coords = parser.parse_bracketed_lattice();
  parser.skip_space();
  if (parser.pos != wrapped.size())
    parser.fail("unexpected trailing input");
  return coords;
}

}  // namespace coxlen
