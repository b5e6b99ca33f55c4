#include <gtest/gtest.h>

#include "asmo/primes.hpp"
#include "asmo/tau.hpp"
#include "oracles.hpp"

using namespace asmo;

TEST(Sieve, MatchesTrialDivision) {
  const Sieve sieve(5000);
  for (std::uint64_t n = 0; n <= 5000; ++n) {
    EXPECT_EQ(sieve.is_prime(n), oracle::is_prime_trial(n)) << n;
    EXPECT_EQ(is_prime(n), oracle::is_prime_trial(n)) << n;
  }
}

TEST(Sieve, FactorRebuildsN) {
  const Sieve sieve(3000);
  for (std::uint64_t n = 2; n <= 3000; ++n) {
    std::uint64_t prod = 1;
    std::uint64_t last = 0;
    for (const auto& [p, e] : sieve.factor(n)) {
      EXPECT_TRUE(oracle::is_prime_trial(p));
      EXPECT_GT(p, last);
      last = p;
      for (int i = 0; i < e; ++i) prod *= p;
    }
    EXPECT_EQ(prod, n);
  }
}

TEST(Legendre, AgreesWithSquares) {
  for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 101}) {
    for (long long a = -30; a <= 60; ++a) {
      EXPECT_EQ(legendre(a, p), oracle::legendre_by_squares(a, static_cast<long long>(p))) << a << " mod " << p;
    }
  }
  EXPECT_EQ(legendre(2, 5), -1);
  EXPECT_EQ(legendre(3, 5), -1);
  EXPECT_EQ(legendre(3, 13), 1);
  EXPECT_THROW(legendre(1, 9), std::invalid_argument);
  EXPECT_THROW(legendre(1, 2), std::invalid_argument);
}

TEST(PlaceNorm, AcceptsPrimePowersOnly) {
  EXPECT_EQ(PlaceNorm(8).prime(), 2u);
  EXPECT_EQ(PlaceNorm(8).exponent(), 3);
  EXPECT_EQ(PlaceNorm(13).exponent(), 1);
  EXPECT_THROW(PlaceNorm(1), std::invalid_argument);
  EXPECT_THROW(PlaceNorm(6), std::invalid_argument);
  EXPECT_THROW(PlaceNorm(0), std::invalid_argument);
  EXPECT_LT(PlaceNorm(7), PlaceNorm(8));
}

TEST(Tau, KnownValues) {
  const long long known[] = {1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920};
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(static_cast<long long>(ramanujan_tau(n)), known[n - 1]) << n;
}

TEST(Tau, MatchesRepeatedProductOracle) {
  constexpr std::size_t N = 600;
  const auto ref = oracle::tau_by_repeated_product(N);
  for (std::size_t n = 1; n <= N; ++n) EXPECT_TRUE(ramanujan_tau(n) == ref[n]) << n;
}

TEST(Tau, MultiplicativeAndHeckeRelation) {
  EXPECT_TRUE(ramanujan_tau(6) == ramanujan_tau(2) * ramanujan_tau(3));
  EXPECT_TRUE(ramanujan_tau(35) == ramanujan_tau(5) * ramanujan_tau(7));
  // tau(p^2) = tau(p)^2 - p^11.
  for (std::uint64_t p : {2, 3, 5, 7}) {
    __int128 p11 = 1;
    for (int i = 0; i < 11; ++i) p11 *= p;
    EXPECT_TRUE(ramanujan_tau(p * p) == ramanujan_tau(p) * ramanujan_tau(p) - p11) << p;
  }
}

TEST(Tau, DeligneBound) {
  for (std::uint64_t p = 2; p < 2000; ++p) {
    if (!oracle::is_prime_trial(p)) continue;
    EXPECT_LE(std::abs(normalized_tau(p)), 2.0) << p;
  }
  EXPECT_NEAR(normalized_tau(2), -24.0 / std::pow(2.0, 5.5), 1e-15);
}
