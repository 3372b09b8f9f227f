#include "tgha/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace tgha;

namespace {

Matrix random_matrix(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = Cyclotomic(d(rng)) + Cyclotomic(d(rng)) * Cyclotomic::root_of_unity(3, 1);
  }
  return m;
}

} // namespace

TEST_CASE("determinant and inverse") {
  const Matrix m = Matrix::from_rows({{2, 1}, {7, 4}});
  CHECK(determinant(m) == Cyclotomic(1));
  const auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == Matrix::identity(2));
  CHECK_FALSE(inverse(Matrix::from_rows({{1, 2}, {2, 4}})).has_value());

  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = random_matrix(rng, 3);
    const Matrix b = random_matrix(rng, 3);
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
    if (auto ai = inverse(a)) CHECK(a * *ai == Matrix::identity(3));
  }
}

TEST_CASE("nullspace and rank") {
  const Matrix m = Matrix::from_rows({{1, 1, 0}, {0, 0, 1}});
  const auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero(m * ns[0]));
  CHECK(rank(m) == 2);
  CHECK(rank(Matrix(3, 3)) == 0);
  CHECK(nullspace(Matrix::identity(2)).empty());
}

TEST_CASE("solve") {
  const Matrix m = Matrix::from_rows({{1, 2}, {3, 4}});
  const auto x = solve(m, {5, 6});
  REQUIRE(x);
  CHECK(m * *x == Vector{5, 6});
  CHECK_FALSE(solve(Matrix::from_rows({{1, 1}, {1, 1}}), {0, 1}).has_value());
}

TEST_CASE("skew and bilinear") {
  const Matrix j = Matrix::from_rows({{0, 1}, {-1, 0}});
  CHECK(j.is_skew());
  CHECK_FALSE(Matrix::identity(2).is_skew());
  CHECK(bilinear(unit_vector(2, 0), j, unit_vector(2, 1)) == Cyclotomic(1));
  CHECK(j.transpose() == j.scaled(-1));
}
