// Deterministic random generators shared by the property tests.
#pragma once

#include "coxlen/affine.hpp"

#include <random>

namespace coxlen::testing {

using Rng = std::mt19937_64;

inline AffineReflection random_reflection(const RootSystem& rs, Rng& rng,
                                          long long max_offset) {
  std::uniform_int_distribution<int> root(
      0, static_cast<int>(rs.positive_roots().size()) - 1);
  std::uniform_int_distribution<long long> offset(-max_offset, max_offset);
  return {root(rng), offset(rng)};
}

inline ReflectionWord random_word(const RootSystem& rs, Rng& rng,
                                  std::size_t length, long long max_offset) {
  ReflectionWord word;
  for (std::size_t i = 0; i < length; ++i)
    word.push_back(random_reflection(rs, rng, max_offset));
  return word;
}

inline AffineElement random_element(const RootSystem& rs, Rng& rng,
                                    std::size_t max_length,
                                    long long max_offset) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  return evaluate_word(rs, random_word(rs, rng, len(rng), max_offset));
}

}  // namespace coxlen::testing
