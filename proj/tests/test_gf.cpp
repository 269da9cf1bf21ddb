#include <random>

#include "budr/gf.hpp"
#include "doctest.h"

using namespace budr;

TEST_CASE("gf arithmetic matches integer arithmetic mod p") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    PrimeScope scope(p);
    std::mt19937 rng(12345 + p);
    std::uniform_int_distribution<long long> dist(-1000, 1000);
    for (int trial = 0; trial < 1000; ++trial) {
      long long a = dist(rng), b = dist(rng);
      auto norm = [&](long long x) {
        long long r = x % static_cast<long long>(p);
        return r < 0 ? r + p : r;
      };
      CHECK((Fp(a) + Fp(b)).value() == norm(a + b));
      CHECK((Fp(a) * Fp(b)).value() == norm(a * b));
      if (norm(a) != 0) CHECK(Fp(a) * Fp(a).inv() == Fp(1));
    }
  }
}

TEST_CASE("gf rejects non-prime and even moduli") {
  CHECK_THROWS_AS(Fp::set_modulus(4), std::invalid_argument);
  CHECK_THROWS_AS(Fp::set_modulus(2), std::invalid_argument);
  CHECK_THROWS_AS(Fp::set_modulus(1), std::invalid_argument);
  CHECK_THROWS_AS(Fp::set_modulus(9), std::invalid_argument);
}

TEST_CASE("matrix products over GF(p) behave") {
  PrimeScope scope(7);
  Mat a = Mat::Zero(2, 2);
  a(0, 0) = Fp(3);
  a(0, 1) = Fp(5);
  a(1, 0) = Fp(1);
  Mat b = a * a;
  CHECK(b(0, 0) == Fp(3 * 3 + 5 * 1));
  CHECK(b(0, 1) == Fp(15));
  CHECK(equal(a * Mat::Identity(2, 2), a));
}
