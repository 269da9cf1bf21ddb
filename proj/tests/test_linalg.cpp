#include <random>

#include "budr/linalg.hpp"
#include "doctest.h"

using namespace budr;

TEST_CASE("solve_linear: identity system") {
  PrimeScope scope(5);
  Mat a = Mat::Identity(3, 3);
  Vec b(3);
  b << Fp(1), Fp(2), Fp(0);
  auto sol = solve_linear(a, b);
  REQUIRE(sol.consistent);
  CHECK(equal(sol.particular, b));
  CHECK(sol.kernel.cols() == 0);
}

TEST_CASE("solve_linear: zero map kernel") {
  PrimeScope scope(5);
  Mat a = Mat::Zero(2, 2);
  auto sol = solve_linear(a, Vec::Zero(2));
  REQUIRE(sol.consistent);
  CHECK(sol.kernel.cols() == 2);
}

TEST_CASE("solve_linear: rank-1 system over GF(5)") {
  PrimeScope scope(5);
  Mat a(2, 2);
  a << Fp(1), Fp(2), Fp(2), Fp(4);
  auto sol = solve_linear(a, Vec::Zero(2));
  REQUIRE(sol.consistent);
  REQUIRE(sol.kernel.cols() == 1);
  // deterministic reduced kernel basis: (3, 1)
  CHECK(sol.kernel(0, 0) == Fp(3));
  CHECK(sol.kernel(1, 0) == Fp(1));
}

TEST_CASE("solve_linear: inconsistency is a normal return") {
  PrimeScope scope(5);
  Mat a(2, 1);
  a << Fp(1), Fp(2);
  Vec b(2);
  b << Fp(1), Fp(1);
  auto sol = solve_linear(a, b);
  CHECK(!sol.consistent);
}

TEST_CASE("random systems: kernel vectors annihilate, solvability iff rank") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    PrimeScope scope(p);
    std::mt19937 rng(99 + p);
    std::uniform_int_distribution<int> dim(0, 6), entry(0, p - 1);
    for (int trial = 0; trial < 200; ++trial) {
      int m = dim(rng), n = dim(rng);
      Mat a(m, n);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Fp(entry(rng));
      Vec b(m);
      for (int i = 0; i < m; ++i) b(i) = Fp(entry(rng));

      Mat k = kernel_basis(a);
      CHECK(rank_of(a) + k.cols() == n);
      for (int c = 0; c < k.cols(); ++c) CHECK(is_zero(a * k.col(c)));

      auto sol = solve_linear(a, b);
      Mat aug(m, n + 1);
      aug.leftCols(n) = a;
      aug.col(n) = b;
      CHECK(sol.consistent == (rank_of(a) == rank_of(aug)));
      if (sol.consistent) CHECK(equal(a * sol.particular, b));
    }
  }
}

TEST_CASE("inverse and complement helpers") {
  PrimeScope scope(7);
  Mat a(2, 2);
  a << Fp(2), Fp(1), Fp(3), Fp(4);
  REQUIRE(is_invertible(a));
  CHECK(equal(a * inverse_of(a), Mat::Identity(2, 2)));

  Mat cols(3, 1);
  cols << Fp(1), Fp(0), Fp(2);
  auto comp = complement_indices(cols, 3);
  CHECK(comp.size() == 2);
  // complement always extends the span to full rank
  Mat full(3, 3);
  full.col(0) = cols.col(0);
  for (std::size_t i = 0; i < comp.size(); ++i) {
    Vec e = Vec::Zero(3);
    e(comp[i]) = Fp(1);
    full.col(static_cast<Eigen::Index>(i) + 1) = e;
  }
  CHECK(rank_of(full) == 3);
}
