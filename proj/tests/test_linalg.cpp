#include "coxlen/linalg.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace coxlen;

namespace {

Rat q(long long num, long long den = 1) { return make_rat(Int(num), Int(den)); }

Mat mat2(long long a, long long b, long long c, long long d) {
  return Mat::from_rows({{q(a), q(b)}, {q(c), q(d)}});
}

}  // namespace

TEST_CASE("rational construction normalizes signs") {
  CHECK(make_rat(Int(-4), Int(-8)) == Rat(1, 2));
  CHECK(make_rat(Int(4), Int(-8)) == Rat(-1, 2));
  CHECK(rat_to_string(make_rat(Int(3), Int(-6))) == "-1/2");
  CHECK_THROWS_AS(make_rat(Int(1), Int(0)), Error);
}

TEST_CASE("rational integer checks and conversions") {
  CHECK(is_integer(q(6, 3)));
  CHECK_FALSE(is_integer(q(1, 2)));
  CHECK(rat_to_int(q(-9, 3)) == Int(-3));
  CHECK_THROWS_AS(rat_to_int(q(1, 2)), Error);
  CHECK(rat_to_long(q(7)) == 7);
  CHECK(int_to_long(Int(-12)) == -12);
}

TEST_CASE("rational string round trip") {
  for (const char* s : {"0", "5", "-17", "3/4", "-22/7"}) {
    Rat r = rat_from_string(s);
    CHECK(rat_to_string(r) == s);
  }
  CHECK(rat_from_string("4/8") == Rat(1, 2));
}

TEST_CASE("vector arithmetic is exact") {
  Vec u{q(1, 3), q(1)};
  Vec v{q(2, 3), q(-1)};
  CHECK(add(u, v) == Vec{q(1), q(0)});
  CHECK(sub(u, v) == Vec{q(-1, 3), q(2)});
  CHECK(scale(q(3), u) == Vec{q(1), q(3)});
  CHECK(inner(u, v) == q(-7, 9));
  CHECK(is_zero(zero_vec(4)));
  CHECK_FALSE(is_zero(u));
}

TEST_CASE("matrix product and transpose") {
  Mat a = mat2(1, 2, 3, 4);
  Mat b = mat2(0, 1, 1, 0);
  CHECK(mat_mul(a, b) == mat2(2, 1, 4, 3));
  CHECK(mat_mul(a, Mat::identity(2)) == a);
  CHECK(transpose(a) == mat2(1, 3, 2, 4));
  CHECK(mat_vec(a, Vec{q(1), q(-1)}) == Vec{q(-1), q(-1)});
}

TEST_CASE("rank and echelon form") {
  CHECK(rank(mat2(1, 2, 2, 4)) == 1);
  CHECK(rank(mat2(1, 2, 3, 4)) == 2);
  CHECK(rank(Mat(3, 3)) == 0);
  Mat m = Mat::from_rows({{q(0), q(2), q(4)}, {q(1), q(1), q(1)}});
  auto pivots = row_echelon(m);
  REQUIRE(pivots == std::vector<std::size_t>{0, 1});
  CHECK(m.row(0) == Vec{q(1), q(0), q(-1)});
  CHECK(m.row(1) == Vec{q(0), q(1), q(2)});
}

TEST_CASE("rank of vector lists") {
  Vec a{q(1), q(0), q(1)};
  Vec b{q(0), q(1), q(1)};
  Vec c{q(1), q(1), q(2)};
  CHECK(rank_of_vectors({a, b, c}) == 2);
  CHECK(rank_of_vectors({}) == 0);
}

TEST_CASE("linear solve distinguishes consistent and inconsistent") {
  Mat a = mat2(1, 1, 1, -1);
  auto x = solve(a, Vec{q(3), q(1)});
  REQUIRE(x);
  CHECK(*x == Vec{q(2), q(1)});
  Mat singular = mat2(1, 2, 2, 4);
  CHECK_FALSE(solve(singular, Vec{q(1), q(1)}));
  auto y = solve(singular, Vec{q(1), q(2)});
  REQUIRE(y);
  CHECK(mat_vec(singular, *y) == Vec{q(1), q(2)});
}

TEST_CASE("span membership with coefficients") {
  Vec a{q(1), q(0), q(0)};
  Vec b{q(1), q(1), q(0)};
  auto c = in_span({a, b}, Vec{q(3), q(2), q(0)});
  REQUIRE(c);
  CHECK(*c == Vec{q(1), q(2)});
  CHECK_FALSE(in_span({a, b}, Vec{q(0), q(0), q(1)}));
  CHECK_FALSE(in_span({}, Vec{q(1)}));
  auto z = in_span({}, zero_vec(2));
  REQUIRE(z);
  CHECK(z->empty());
}

TEST_CASE("determinant sign and value") {
  CHECK(det(mat2(0, 1, 1, 0)) == q(-1));
  CHECK(det(mat2(2, 0, 0, 3)) == q(6));
  CHECK(det(mat2(1, 2, 2, 4)) == q(0));
  Mat m = Mat::from_rows(
      {{q(1), q(2), q(3)}, {q(0), q(1), q(4)}, {q(5), q(6), q(0)}});
  CHECK(det(m) == q(1));
}

TEST_CASE("pseudo inverse recovers coordinates") {
  Mat a = Mat::from_cols({{q(1), q(0), q(0)}, {q(1), q(1), q(0)}});
  Mat p = pseudo_inverse(a);
  CHECK(mat_mul(p, a) == Mat::identity(2));
  Mat dependent = Mat::from_cols({{q(1), q(2)}, {q(2), q(4)}});
  CHECK_THROWS_AS(pseudo_inverse(dependent), Error);
}

TEST_CASE("random matrices satisfy exact rank laws") {
  std::mt19937_64 rng(20240101);
  std::uniform_int_distribution<long long> entry(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + trial % 3;
    Mat a(n, n), b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = q(entry(rng));
        b(i, j) = q(entry(rng));
      }
    Mat ab = mat_mul(a, b);
    CHECK(rank(ab) <= std::min(rank(a), rank(b)));
    CHECK(det(ab) == det(a) * det(b));
    CHECK(rank(transpose(a)) == rank(a));
    Vec x(n, q(0));
    for (std::size_t i = 0; i < n; ++i) x[i] = q(entry(rng));
    CHECK(mat_vec(ab, x) == mat_vec(a, mat_vec(b, x)));
  }
}

TEST_CASE("random solves verify against substitution") {
  std::mt19937_64 rng(20240102);
  std::uniform_int_distribution<long long> entry(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + trial % 3;
    Mat a(n, n);
    Vec rhs(n, q(0));
    for (std::size_t i = 0; i < n; ++i) {
      rhs[i] = q(entry(rng));
      for (std::size_t j = 0; j < n; ++j) a(i, j) = q(entry(rng));
    }
    auto x = solve(a, rhs);
    if (x) CHECK(mat_vec(a, *x) == rhs);
  }
}
