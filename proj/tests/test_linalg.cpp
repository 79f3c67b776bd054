#include <doctest.h>

#include <random>

#include "omegalie/linalg.hpp"
#include "support.hpp"

using namespace omegalie;

namespace {

Matrix e(std::size_t i, std::size_t j) { return Matrix::unit(3, i - 1, j - 1); }

}  // namespace

TEST_CASE("rref examples") {
  const auto id = rref(Matrix::identity(3));
  CHECK(id.reduced == Matrix::identity(3));
  CHECK(id.rank == 3);
  const auto z = rref(Matrix::zero(2, 2));
  CHECK(z.reduced == Matrix::zero(2, 2));
  CHECK(z.rank == 0);
  const auto r = rref(Matrix{{1, 2}, {2, 4}});
  CHECK(r.reduced == Matrix{{1, 2}, {0, 0}});
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace(Matrix::identity(4)).empty());
  CHECK(nullspace(Matrix::zero(1, 3)).size() == 3);
  const auto ns = nullspace(Matrix{{1, 1, 0}, {0, 0, 1}});
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == Vector{1, -1, 0});
}

TEST_CASE("determinants") {
  CHECK(det(Matrix::identity(4)) == Scalar(1));
  CHECK(det(Matrix{{2, 0}, {0, 3}}) == Scalar(6));
  // C_1 automorphism block with a = b = 1, c = d = 0.
  CHECK(det(Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == Scalar(1));
  CHECK_THROWS_AS(det(Matrix(2, 3)), NonSquare);
  CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}).has_value());
}

TEST_CASE("subspace equality") {
  const std::vector<Matrix> a{e(1, 3) - e(2, 3), e(3, 3)}, b{e(3, 3), e(1, 3) - e(2, 3)};
  CHECK(subspace_equal(MatrixSubspace::span(3, 3, a), MatrixSubspace::span(3, 3, b)));
  const std::vector<Matrix> c{e(1, 3)}, d{e(2, 3)};
  CHECK_FALSE(subspace_equal(MatrixSubspace::span(3, 3, c), MatrixSubspace::span(3, 3, d)));
  CHECK_THROWS_AS(subspace_equal(MatrixSubspace(2, 2), MatrixSubspace(3, 3)), DimensionMismatch);
}

TEST_CASE("rank-nullity and rref idempotence on random matrices") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const Matrix m = support::random_matrix(rng, r, c, 0.5);
    const auto red = rref(m);
    CHECK(rref(red.reduced).reduced == red.reduced);
    const auto ns = nullspace(m);
    CHECK(red.rank + ns.size() == c);
    for (const auto& v : ns) CHECK(apply_cols(m, v) == Vector(r));
  }
}

TEST_CASE("inverse and solve on random matrices") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const Matrix m = support::random_invertible(rng, n);
    const Matrix inv = *inverse(m);
    CHECK(m * inv == Matrix::identity(n));
    CHECK(det(m) * det(inv) == Scalar(1));
    const Vector b = support::random_matrix(rng, 1, n).row(0);
    const auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(apply_cols(m, *x) == b);
  }
  CHECK_FALSE(solve(Matrix{{1, 1}, {1, 1}}, Vector{1, 2}).has_value());
}
