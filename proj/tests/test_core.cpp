#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support/fixtures.hpp"

using namespace maxplus;
using namespace fixtures;

TEST_CASE("oplus is max with BOTTOM least", "[core]") {
  CHECK(oplus(Scalar(3), Scalar(5)) == Scalar(5));
  CHECK(oplus(bottom, Scalar(-2)) == Scalar(-2));
  CHECK(oplus(Scalar(0), Scalar(0)) == Scalar(0));
  CHECK(oplus(bottom, bottom).is_bottom());
}

TEST_CASE("otimes is addition absorbing on BOTTOM", "[core]") {
  CHECK(otimes(Scalar(3), Scalar(5)) == Scalar(8));
  CHECK(otimes(bottom, Scalar(7)).is_bottom());
  CHECK(otimes(Scalar(0), q(-7, 3)) == q(-7, 3));
  CHECK(otimes(q(1, 2), q(1, 3)) == q(5, 6));
}

TEST_CASE("scalar ordering and value access", "[core]") {
  CHECK(bottom < Scalar(-1000000));
  CHECK(q(1, 3) < q(1, 2));
  CHECK(Scalar(Rational(2, 4)) == q(1, 2));
  CHECK_THROWS_AS(bottom.value(), PreconditionError);
  CHECK(bottom.to_string() == "-inf");
  CHECK(q(-6, 4).to_string() == "-3/2");
}

namespace {

Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 6), pick(0, 7);
  if (pick(rng) == 0) return bottom;
  return Scalar(Rational(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("semiring laws hold on random rationals and BOTTOM", "[core][property]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 3000; ++trial) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    REQUIRE(oplus(oplus(a, b), c) == oplus(a, oplus(b, c)));
    REQUIRE(oplus(a, b) == oplus(b, a));
    REQUIRE(oplus(a, a) == a);
    REQUIRE(otimes(otimes(a, b), c) == otimes(a, otimes(b, c)));
    REQUIRE(otimes(a, b) == otimes(b, a));
    REQUIRE(otimes(a, oplus(b, c)) == oplus(otimes(a, b), otimes(a, c)));
    REQUIRE(oplus(bottom, a) == a);
    REQUIRE(otimes(bottom, a).is_bottom());
    REQUIRE(otimes(Scalar(0), a) == a);
  }
}

TEST_CASE("mat_vec on the worked example", "[core]") {
  const Matrix a = example_matrix();
  const Vector x = example_x1();
  const Vector expected{0, 0, 0, -3, -3};
  CHECK(naive_mat_vec(a, x) == expected);
  CHECK(mat_vec(a, x) == expected);
}

TEST_CASE("mat_vec with identity and all-BOTTOM matrices", "[core]") {
  const Vector x{2, ninf, q(-1, 3)};
  CHECK(mat_vec(Matrix::identity(3), x) == x);
  CHECK(mat_vec(Matrix(3), x) == Vector(3));
  CHECK_THROWS_AS(mat_vec(Matrix(2), x), DimensionMismatch);
}

TEST_CASE("is_solution", "[core]") {
  const Matrix a = example_matrix();
  CHECK(is_solution(a, example_x1()));
  CHECK(is_solution(a, example_x2()));
  CHECK_FALSE(is_solution(a, Vector(5)));
  CHECK_FALSE(is_solution(a, Vector{0, 0, 0, 1, 0}));  // row 4: max(-3, 0) < 1
  CHECK(first_violated_row(a, Vector{0, 0, 0, 1, 0}) == Index{3});
  CHECK_THROWS_AS(require_solution(a, Vector(5)), NotASolution);
}

TEST_CASE("scale", "[core]") {
  CHECK(scale(Vector{2, -1, ninf}) == Vector{0, -3, ninf});
  CHECK(scale(example_x1()) == example_x1());
  CHECK(scale(Vector{-5}) == Vector{0});
  CHECK_THROWS_AS(scale(Vector(3)), PreconditionError);
}

TEST_CASE("tight_rows", "[core]") {
  CHECK(tight_rows(example_matrix(), example_x1()) == nodes1({1, 2, 3, 4}));
  const Vector x{1, ninf, q(2, 3)};
  CHECK(tight_rows(Matrix::identity(3), x) == support(x));
  const Matrix slack{{1, 1}, {1, 1}};
  CHECK(tight_rows(slack, Vector{0, 0}).empty());
  CHECK_THROWS_AS(tight_rows(Matrix{{-1}}, Vector{0}), NotASolution);
}

TEST_CASE("homogeneity and scaling invariance on random instances", "[core][property]") {
  std::mt19937_64 rng(99);
  for (const auto& c : random_cases(4, 1)) {
    const Scalar alpha = Scalar(Rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 5) + 1));
    const Vector shifted = shift(alpha, c.x);
    INFO(c.label);
    REQUIRE(mat_vec(c.a, shifted) == shift(alpha, mat_vec(c.a, c.x)));
    REQUIRE(is_solution(c.a, shifted) == is_solution(c.a, c.x));
    REQUIRE(scale(scale(c.x)) == scale(c.x));
    REQUIRE(scale(shifted) == scale(c.x));
    REQUIRE(mat_vec(c.a, c.x) == naive_mat_vec(c.a, c.x));
  }
}
