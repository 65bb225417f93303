#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "thurstonkit/errors.hpp"
#include "thurstonkit/linalg.hpp"

using namespace thurstonkit;
using testing::q;

TEST_CASE("solve: identity, 2x2, inconsistent") {
  auto x = solve_linear_system(RatMat::identity(3), RatVec{3, -1, -3});
  REQUIRE(x);
  CHECK(*x == RatVec{3, -1, -3});

  x = solve_linear_system(RatMat::from_rows({RatVec{1, 1}, RatVec{1, -1}}), RatVec{2, 0});
  REQUIRE(x);
  CHECK(*x == RatVec{1, 1});

  CHECK_FALSE(solve_linear_system(RatMat::from_rows({RatVec{1, 0}, RatVec{1, 0}}), RatVec{1, 2}));
}

TEST_CASE("solve: underdetermined systems set free variables to zero") {
  const auto x = solve_linear_system(RatMat::from_rows({RatVec{1, 2, 3}}), RatVec{6});
  REQUIRE(x);
  CHECK(*x == RatVec{6, 0, 0});
}

TEST_CASE("solve: row count mismatch") {
  CHECK_THROWS_AS(solve_linear_system(RatMat::identity(2), RatVec{1, 2, 3}), ContractViolation);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(RatMat::from_rows({RatVec{1, -1}})) == std::vector<RatVec>{RatVec{1, 1}});
  CHECK(kernel_basis(RatMat::identity(2)).empty());
  CHECK(kernel_basis(RatMat::from_rows({RatVec{1, -1}, RatVec{-1, 1}})) == std::vector<RatVec>{RatVec{1, 1}});
}

TEST_CASE("rank and row space") {
  const RatMat m = RatMat::from_rows({RatVec{1, 2, 3}, RatVec{2, 4, 6}, RatVec{0, 1, 1}});
  CHECK(rank(m) == 2);
  CHECK(row_space_basis(m) == std::vector<RatVec>{RatVec{1, 0, 1}, RatVec{0, 1, 1}});
}

TEST_CASE("projection removes the spanned component") {
  const RatVec p = project_out(RatVec{1, 2, 3}, {RatVec{1, 1, 0}});
  CHECK(dot(p, RatVec{1, 1, 0}) == Rat(0));
  CHECK(p == RatVec{q(-1, 2), q(1, 2), 3});
}

TEST_CASE("random systems: solutions reproduce b, kernels annihilate rows") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = dim(rng);
    const std::size_t cols = dim(rng);
    std::vector<RatVec> r;
    for (std::size_t i = 0; i < rows; ++i) r.push_back(oracle::random_int_vec(rng, cols, -3, 3));
    const RatMat a = RatMat::from_rows(r, cols);
    const RatVec b = oracle::random_int_vec(rng, rows, -5, 5);

    const auto x = solve_linear_system(a, b);
    oracle::Matrix am;
    for (const auto& row : r) am.push_back(row.coords());
    const auto ox = oracle::gauss_solve(am, b.coords(), cols);
    CHECK(x.has_value() == ox.has_value());
    if (x) CHECK(a * *x == b);

    const auto ker = kernel_basis(a);
    CHECK(ker.size() == cols - rank(a));
    for (const auto& k : ker) {
      CHECK(a * k == RatVec::zeros(rows));
    }
    if (ker.size()) CHECK(rank(RatMat::from_rows(ker)) == ker.size());
  }
}
