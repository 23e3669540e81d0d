// The universal Coxeter group on three involutions a, b, c (no braid
// relations): normal forms, inversions, and two independent brute-force
// reflection length searches used to validate each other.
#pragma once

#include "coxlen/rational.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace coxlen {

inline void uc_validate(const std::string& word) {
  for (char ch : word)
    if (ch != 'a' && ch != 'b' && ch != 'c')
      throw Error("universal words use the letters a, b, c");
}

// Unique reduced form: with no relations besides the involutions, reduction
// is exactly cancellation of adjacent equal letters.
inline std::string uc_reduce(const std::string& word) {
  uc_validate(word);
  std::string out;
  for (char ch : word) {
    if (!out.empty() && out.back() == ch)
      out.pop_back();
    else
      out.push_back(ch);
  }
  return out;
}

inline std::string uc_mul(const std::string& u, const std::string& v) {
  return uc_reduce(u + v);
}

inline int uc_standard_length(const std::string& word) {
  return static_cast<int>(uc_reduce(word).size());
}

// Reflections are exactly the odd-length palindromes.
inline bool uc_is_reflection(const std::string& word) {
  std::string w = uc_reduce(word);
  if (w.empty() || w.size() % 2 == 0) return false;
  return std::equal(w.begin(), w.end(), w.rbegin());
}

// Left inversions of a reduced word s1...sm: the m distinct reflections
// s1...si...s1.
inline std::vector<std::string> uc_inversions(const std::string& word) {
  std::string w = uc_reduce(word);
  std::vector<std::string> out;
  std::string prefix;
  for (char ch : w) {
    out.push_back(prefix + ch + std::string(prefix.rbegin(), prefix.rend()));
    prefix.push_back(ch);
  }
  std::set<std::string> uniq(out.begin(), out.end());
  if (uniq.size() != out.size())
    throw Error("internal: repeated inversion along a reduced word");
  return out;
}

namespace detail {

inline bool uc_dfs(const std::string& residual, int remaining,
                   const std::vector<std::string>& alphabet,
                   const std::set<std::string>& alphabet_set,
                   std::size_t max_letter, const std::string* last) {
  if (remaining == 0) return residual.empty();
  if (residual.size() > remaining * max_letter) return false;
  if (remaining == 1) return alphabet_set.count(residual) != 0;
  for (const std::string& t : alphabet) {
    if (last && *last == t) continue;
    if (uc_dfs(uc_mul(t, residual), remaining - 1, alphabet, alphabet_set,
               max_letter, &t))
      return true;
  }
  return false;
}

inline int uc_search(const std::string& w,
                     std::vector<std::string> alphabet) {
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()),
                 alphabet.end());
  std::set<std::string> alphabet_set(alphabet.begin(), alphabet.end());
  std::size_t max_letter = 0;
  for (const std::string& t : alphabet)
    max_letter = std::max(max_letter, t.size());
  int ls = static_cast<int>(w.size());
  for (int d = ls % 2 == 0 ? 2 : 1; d <= ls; d += 2)
    if (uc_dfs(w, d, alphabet, alphabet_set, max_letter, nullptr)) return d;
  throw Error("internal: no factorization within the standard-length cap");
}

}  // namespace detail

// Reflection length by iterative-deepening search over the inversions of w
// alone (a complete alphabet for minimal factorizations). Depths step by 2:
// every reflection has odd standard length, so length parity is preserved.
// The search is capped at the standard length, which is always sufficient
// since the letters of a reduced word factor it.
inline int uc_reflection_length(const std::string& word) {
  std::string w = uc_reduce(word);
  if (w.empty()) return 0;
  if (w.size() > 12)
    throw Error("restricted search supports standard length at most 12");
  return detail::uc_search(w, uc_inversions(w));
}

namespace detail {

// Every reduced odd palindrome of length at most max_len.
inline std::vector<std::string> uc_palindromes(std::size_t max_len) {
  std::vector<std::string> out{"a", "b", "c"};
  std::vector<std::string> halves{""};
  std::size_t h_max = max_len == 0 ? 0 : (max_len - 1) / 2;
  for (std::size_t h = 1; h <= h_max; ++h) {
    std::vector<std::string> next;
    for (const std::string& u : halves)
      for (char ch : {'a', 'b', 'c'}) {
        if (!u.empty() && u.back() == ch) continue;
        next.push_back(u + ch);
      }
    halves = next;
    for (const std::string& u : halves)
      for (char ch : {'a', 'b', 'c'}) {
        if (u.back() == ch) continue;
        out.push_back(u + ch + std::string(u.rbegin(), u.rend()));
      }
  }
  return out;
}

}  // namespace detail

// Reflection length over the full alphabet of reflections of standard length
// at most 2 l_S(w) - 1 (longer letters cannot appear in a minimal
// factorization). Exponentially larger alphabet than the restricted search;
// kept for cross-validation on short words.
inline int uc_reflection_length_unrestricted(const std::string& word) {
  std::string w = uc_reduce(word);
  if (w.empty()) return 0;
  if (w.size() > 8)
    throw Error("unrestricted search supports standard length at most 8");
  return detail::uc_search(w, detail::uc_palindromes(2 * w.size() - 1));
}

}  // namespace coxlen
