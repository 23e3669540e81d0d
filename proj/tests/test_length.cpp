#include "coxlen/length.hpp"

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace coxlen;
using coxlen::testing::Rng;

namespace {

Rat q(long long n, long long d = 1) { return make_rat(Int(n), Int(d)); }

ReflectionWord spherical_word(const RootSystem& rs, Rng& rng,
                              std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> root(
      0, static_cast<int>(rs.positive_roots().size()) - 1);
  ReflectionWord word;
  std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) word.push_back({root(rng), 0});
  return word;
}

}  // namespace

TEST_CASE("spherical length by fixed-space codimension") {
  RootSystem a3 = RootSystem::build("A3");
  CHECK(spherical_length(a3, identity_element(a3)) == 0);
  AffineElement refl = reflection_to_element(a3, {0, 0});
  CHECK(spherical_length(a3, refl) == 1);
  // product of the three simple reflections: a 4-cycle, length 3
  ReflectionWord cox;
  for (int p : a3.simple_positive_indices()) cox.push_back({p, 0});
  CHECK(spherical_length(a3, evaluate_word(a3, cox)) == 3);
  RootSystem b2 = RootSystem::build("B2");
  AffineElement minus_id{zero_vec(2), mat_sub(Mat(2, 2), Mat::identity(2))};
  CHECK(spherical_length(b2, minus_id) == 2);
  CHECK_THROWS_AS(spherical_length(a3, translation_element(a3, {1, 0, 0})),
                  Error);
}

TEST_CASE("greedy factorization is minimal and evaluates back") {
  Rng rng(20240401);
  for (const char* spec : {"A2", "B2", "A3", "G2", "D4"}) {
    RootSystem rs = RootSystem::build(spec);
    for (int trial = 0; trial < 40; ++trial) {
      AffineElement w = evaluate_word(rs, spherical_word(rs, rng, 5));
      ReflectionWord word = carter_factorization(rs, w);
      CHECK(static_cast<int>(word.size()) == spherical_length(rs, w));
      CHECK(evaluate_word(rs, word) == w);
      for (const AffineReflection& r : word) CHECK(r.offset == 0);
    }
  }
}

TEST_CASE("real dimension on known vectors") {
  RootSystem a2 = RootSystem::build("A2");
  CHECK(real_dimension(a2, {0, 0}).k == 0);
  CHECK(real_dimension(a2, {1, 0}).k == 1);
  CHECK(real_dimension(a2, {1, 1}).k == 1);  // e1 - e3 is a coroot
  CHECK(real_dimension(a2, {1, -1}).k == 2);
  RootSystem a3 = RootSystem::build("A3");
  CHECK(real_dimension(a3, {1, 1, 1}).k == 1);
  RootSystem d4 = RootSystem::build("D4");
  RealDimensionWitness w = real_dimension(d4, {2, 2, 1, 1});  // 2e1
  CHECK(w.k == 2);
  CHECK(w.coroot_indices == std::vector<int>{6, 11});
  // coefficients recover 2e1 = (e1-e2) + (e1+e2)
  CHECK(w.coefficients == Vec{q(1), q(1)});
}

TEST_CASE("every minimal subspace for 2e1 in D4 is one of three planes") {
  RootSystem d4 = RootSystem::build("D4");
  auto planes = minimal_subspaces(d4, {2, 2, 1, 1});
  REQUIRE(planes.size() == 3);
  CHECK(planes[0].coroot_indices == std::vector<int>{6, 11});
  for (const MinimalSubspace& p : planes) {
    Vec target{q(2), q(0), q(0), q(0)};
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < p.basis_rref.rows(); ++r)
      rows.push_back(p.basis_rref.row(r));
    CHECK(in_span(rows, target).has_value());
  }
  CHECK(minimal_subspaces(d4, {0, 0, 0, 0}).empty());
}

TEST_CASE("integral expressions have exactly k integer terms") {
  RootSystem d4 = RootSystem::build("D4");
  DimensionWitness w = integral_expression(d4, {2, 2, 1, 1});
  REQUIRE(w.k == 2);
  CHECK(w.coroots[0] == Vec{q(1), q(-1), q(0), q(0)});
  CHECK(w.coroots[1] == Vec{q(1), q(1), q(0), q(0)});
  CHECK(w.coefficients == std::vector<long long>{1, 1});

  RootSystem a2 = RootSystem::build("A2");
  DimensionWitness full = integral_expression(a2, {1, -1});
  CHECK(full.k == 2);
  CHECK(full.coroots == a2.simple_coroots());
  CHECK(full.coefficients == std::vector<long long>{1, -1});
  DimensionWitness line = integral_expression(a2, {2, 2});
  CHECK(line.k == 1);
  CHECK(line.coefficients == std::vector<long long>{2});
  CHECK(integral_expression(a2, {0, 0}).k == 0);
}

TEST_CASE("integral and real dimensions agree on random lattice vectors") {
  Rng rng(20240402);
  std::uniform_int_distribution<long long> coord(-4, 4);
  for (const char* spec : {"A2", "B2", "G2", "A3", "D4"}) {
    RootSystem rs = RootSystem::build(spec);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<long long> lambda(static_cast<std::size_t>(rs.rank()));
      for (auto& c : lambda) c = coord(rng);
      RealDimensionWitness real = real_dimension(rs, lambda);
      DimensionWitness integral = integral_expression(rs, lambda);
      CHECK(real.k == integral.k);
      Vec sum = zero_vec(static_cast<std::size_t>(rs.ambient_dim()));
      for (std::size_t i = 0; i < integral.coroots.size(); ++i)
        sum = add(sum, scale(q(integral.coefficients[i]), integral.coroots[i]));
      CHECK(sum == rs.lattice_to_ambient(lambda));
    }
  }
}

TEST_CASE("translation factorizations have length 2k") {
  Rng rng(20240403);
  std::uniform_int_distribution<long long> coord(-3, 3);
  for (const char* spec : {"A2", "B2", "G2", "A3", "D4"}) {
    RootSystem rs = RootSystem::build(spec);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<long long> lambda(static_cast<std::size_t>(rs.rank()));
      for (auto& c : lambda) c = coord(rng);
      int k = real_dimension(rs, lambda).k;
      ReflectionWord word = factor_translation(rs, lambda);
      CHECK(static_cast<int>(word.size()) == 2 * k);
      CHECK(evaluate_word(rs, word) == translation_element(rs, lambda));
      LengthReport rep = translation_length(rs, lambda);
      CHECK(rep.lower == 2 * k);
      CHECK(rep.upper == std::optional<int>(2 * k));
      CHECK(rep.exact);
      CHECK(rep.certificate == Certificate::translation_2k);
    }
  }
}

TEST_CASE("rewriting moves selected letters verbatim") {
  RootSystem a3 = RootSystem::build("A3");
  Rng rng(20240404);
  std::uniform_int_distribution<std::size_t> len(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    ReflectionWord word =
        coxlen::testing::random_word(a3, rng, len(rng), 2);
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < word.size(); ++i)
      if (rng() % 2) positions.push_back(i);
    if (positions.empty()) positions.push_back(rng() % word.size());
    Side side = rng() % 2 ? Side::front : Side::back;
    ReflectionWord moved = rewrite_factorization(a3, word, positions, side);
    REQUIRE(moved.size() == word.size());
    CHECK(evaluate_word(a3, moved) == evaluate_word(a3, word));
    std::size_t k = positions.size();
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t at = side == Side::front ? i : moved.size() - k + i;
      CHECK(moved[at] == word[positions[i]]);
    }
  }
}

TEST_CASE("rewriting rejects bad positions") {
  RootSystem a2 = RootSystem::build("A2");
  ReflectionWord word{{0, 0}, {1, 1}};
  CHECK_THROWS_AS(rewrite_factorization(a2, word, {2}, Side::front), Error);
  CHECK_THROWS_AS(rewrite_factorization(a2, word, {1, 1}, Side::back), Error);
  CHECK_THROWS_AS(rewrite_factorization(a2, word, {1, 0}, Side::back), Error);
}

TEST_CASE("origin-moving elements have length k and hit lambda") {
  Rng rng(20240405);
  std::uniform_int_distribution<long long> coord(-3, 3);
  for (const char* spec : {"A2", "B2", "G2", "A3", "D4"}) {
    RootSystem rs = RootSystem::build(spec);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<long long> lambda(static_cast<std::size_t>(rs.rank()));
      for (auto& c : lambda) c = coord(rng);
      int k = real_dimension(rs, lambda).k;
      MoveOrigin mo = move_origin_element(rs, lambda);
      CHECK(static_cast<int>(mo.letters.size()) == k);
      CHECK(evaluate_word(rs, mo.letters) == mo.element);
      Vec image = apply_element(
          mo.element, zero_vec(static_cast<std::size_t>(rs.ambient_dim())));
      CHECK(image == rs.lattice_to_ambient(lambda));
      auto exact = lin_ind_length(rs, mo.letters);
      REQUIRE(exact);
      CHECK(*exact == k);
    }
  }
}

TEST_CASE("linear independence certifies exact witness lengths") {
  RootSystem a3 = RootSystem::build("A3");
  CHECK(lin_ind_length(a3, {{3, 0}, {0, 0}}) == std::optional<int>(2));
  CHECK_FALSE(lin_ind_length(a3, {{5, 0}, {5, 1}}));
  CHECK(lin_ind_length(a3, {}) == std::optional<int>(0));
}

TEST_CASE("length bounds on benchmark elements") {
  RootSystem a2 = RootSystem::build("A2");
  LengthReport t10 = length_bounds(a2, translation_element(a2, {1, 0}));
  CHECK(t10.lower == 2);
  CHECK(t10.upper == std::optional<int>(2));
  CHECK(t10.exact);
  CHECK(t10.certificate == Certificate::translation_2k);

  RootSystem a3 = RootSystem::build("A3");
  LengthReport refl = length_bounds(a3, reflection_to_element(a3, {0, 0}));
  CHECK(refl.lower == 1);
  CHECK(refl.exact);
  CHECK(refl.certificate == Certificate::spherical_carter);

  // t_{e1-e4} times the 4-cycle: bounds meet at 3
  AffineElement mixed = compose(
      translation_element(a3, {1, 1, 1}),
      evaluate_word(a3, {{0, 0}, {3, 0}, {5, 0}}));
  LengthReport rep = length_bounds(a3, mixed);
  CHECK(rep.lower >= 3);
  CHECK(rep.lower == 3);
  CHECK(rep.upper == std::optional<int>(3));
  CHECK(rep.exact);
}

TEST_CASE("length bounds are sound and witnessed on random elements") {
  Rng rng(20240406);
  for (const char* spec : {"A2", "B2", "G2", "A3"}) {
    RootSystem rs = RootSystem::build(spec);
    for (int trial = 0; trial < 50; ++trial) {
      AffineElement w = coxlen::testing::random_element(rs, rng, 5, 2);
      LengthReport rep = length_bounds(rs, w);
      REQUIRE(rep.upper);
      CHECK(rep.lower <= *rep.upper);
      CHECK(*rep.upper <= 2 * rs.rank());
      CHECK(rep.exact == (rep.lower == *rep.upper));
      REQUIRE(rep.witness);
      CHECK(static_cast<int>(rep.witness->size()) == *rep.upper);
      CHECK(evaluate_word(rs, *rep.witness) == w);
      int carter = static_cast<int>(
          rank(mat_sub(w.m, Mat::identity(w.m.rows()))));
      CHECK((rep.lower - carter) % 2 == 0);
    }
  }
}

TEST_CASE("product groups add their factor lengths") {
  RootSystem rs = RootSystem::build("A1xA1");
  LengthReport rep = length_bounds(rs, translation_element(rs, {1, 1}));
  CHECK(rep.lower == 4);
  CHECK(rep.upper == std::optional<int>(4));
  CHECK(rep.exact);
  CHECK(rep.certificate == Certificate::translation_2k);
  REQUIRE(rep.witness);
  CHECK(evaluate_word(rs, *rep.witness) == translation_element(rs, {1, 1}));

  RootSystem mixed = RootSystem::build("A1xA2");
  // spherical part in the first factor, a full-dimension translation in the
  // second: lengths 1 and 4
  AffineElement w = compose(translation_element(mixed, {0, 1, -1}),
                            reflection_to_element(mixed, {3, 0}));
  LengthReport r = length_bounds(mixed, w);
  CHECK(r.lower == 5);
  CHECK(r.upper == std::optional<int>(5));
  CHECK(r.exact);
  REQUIRE(r.witness);
  CHECK(evaluate_word(mixed, *r.witness) == w);
}

TEST_CASE("reducible reports sum bounds and merge certificates") {
  LengthReport a{2, 2, true, Certificate::translation_2k,
                 ReflectionWord{{0, 1}, {0, 0}}};
  LengthReport b{1, 3, false, Certificate::bounds_only,
                 ReflectionWord{{1, 0}, {2, 0}, {1, 1}}};
  LengthReport sum = reducible_length({a, b});
  CHECK(sum.lower == 3);
  CHECK(sum.upper == std::optional<int>(5));
  CHECK_FALSE(sum.exact);
  CHECK(sum.certificate == Certificate::bounds_only);
  REQUIRE(sum.witness);
  CHECK(sum.witness->size() == 5);

  LengthReport no_upper{2, std::nullopt, false, Certificate::bounds_only,
                        std::nullopt};
  LengthReport merged = reducible_length({a, no_upper});
  CHECK(merged.lower == 4);
  CHECK_FALSE(merged.upper);
  CHECK_FALSE(merged.exact);
  CHECK_FALSE(merged.witness);

  LengthReport empty = reducible_length({});
  CHECK(empty.lower == 0);
  CHECK(empty.upper == std::optional<int>(0));
  CHECK(empty.exact);
}

TEST_CASE("minimal cover lower bound dominates the span dimension") {
  RootSystem a2 = RootSystem::build("A2");
  // rotation: moved space is the whole plane
  AffineElement rot = evaluate_word(a2, {{0, 0}, {1, 0}});
  CHECK(min_coroot_cover(a2, rot) == 2);
  CHECK(min_coroot_cover(a2, identity_element(a2)) == 0);
  // translation along a non-coroot line needs a 2-plane
  AffineElement skew = translation_element(a2, {1, -1});
  CHECK(min_coroot_cover(a2, skew) == 2);
  AffineElement line = translation_element(a2, {1, 1});
  CHECK(min_coroot_cover(a2, line) == 1);
}
