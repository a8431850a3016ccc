#include "simseq/props.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"

using namespace simseq;

TEST(Val2, Examples) {
  EXPECT_EQ(val2(1).value, 0u);
  EXPECT_EQ(val2(104).value, 3u);
  EXPECT_EQ(val2(12).value, 2u);
  EXPECT_EQ(val2(std::uint64_t{1} << 63).value, 63u);
  EXPECT_THROW(val2(0), DomainError);
}

TEST(Val2, DoublingAndOddRules) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t n = (rng() >> 2) | 1u;
    const std::uint64_t m = n << (rng() % 3);
    EXPECT_EQ(val2(2 * m).value, val2(m).value + 1);
    EXPECT_EQ(val2(2 * m + 1).value, 0u);
    EXPECT_EQ(val2(m).value, oracle::two_adic(m));
  }
}

TEST(TmParity, Examples) {
  EXPECT_EQ(tm_parity(3).value, 0u);
  EXPECT_EQ(tm_parity(4).value, 1u);
  EXPECT_EQ(tm_parity(93).value, 1u);
  EXPECT_THROW(tm_parity(0), DomainError);
}

TEST(TmParity, RecursionRules) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t n = (rng() >> 2) + 1;
    EXPECT_EQ(tm_parity(2 * n).value, tm_parity(n).value);
    EXPECT_EQ(tm_parity(2 * n + 1).value, 1 - tm_parity(n).value);
    EXPECT_EQ(tm_parity(n).value, oracle::thue_morse(n));
  }
}

TEST(TmParity, EveryBlockOfFourIsBalanced) {
  for (std::uint64_t t = 1; t < 200000; ++t) {
    unsigned odious = 0;
    for (std::uint64_t j = 0; j < 4; ++j) odious += tm_parity(4 * t + j).value;
    ASSERT_EQ(odious, 2u) << "t = " << t;
  }
}

TEST(IsPrime, Examples) {
  EXPECT_EQ(is_prime(1).value, 0u);
  EXPECT_EQ(is_prime(4).value, 0u);
  EXPECT_EQ(is_prime(29).value, 1u);
  EXPECT_EQ(is_prime(2).value, 1u);
  EXPECT_THROW(is_prime(0), DomainError);
}

TEST(IsPrime, AgreesWithTrialDivisionUpToOneMillion) {
  for (std::uint64_t n = 1; n <= 1000000; ++n) {
    ASSERT_EQ(is_prime(n).value == 1, oracle::prime_by_trial(n)) << n;
  }
}

TEST(IsPrime, LargeValues) {
  // Largest 64-bit prime and well-known strong pseudoprimes to small bases.
  EXPECT_EQ(is_prime(18446744073709551557ull).value, 1u);
  EXPECT_EQ(is_prime(18446744073709551615ull).value, 0u);
  EXPECT_EQ(is_prime(3215031751ull).value, 0u);         // spsp(2,3,5,7)
  EXPECT_EQ(is_prime(3825123056546413051ull).value, 0u);  // spsp to bases <= 23
  EXPECT_EQ(is_prime(1000000007ull * 998244353ull).value, 0u);
  EXPECT_EQ(is_prime((std::uint64_t{1} << 61) - 1).value, 1u);
  // Around the sieve boundary.
  for (std::uint64_t n = detail::kSieveLimit - 2000; n < detail::kSieveLimit + 2000; ++n) {
    ASSERT_EQ(is_prime(n).value == 1, oracle::prime_by_trial(n)) << n;
  }
}

TEST(Omega, Examples) {
  EXPECT_EQ(omega(3).value, 1u);
  EXPECT_EQ(omega(2).value, 1u);
  EXPECT_EQ(omega(8).value, 1u);
  EXPECT_EQ(omega(12).value, 2u);
  EXPECT_EQ(omega(20).value, 2u);
  EXPECT_THROW(omega(1), DomainError);
  EXPECT_THROW(omega(0), DomainError);
}

TEST(Omega, AgreesWithBruteForce) {
  for (std::uint64_t n = 2; n <= 200000; ++n) {
    ASSERT_EQ(omega(n).value, oracle::distinct_prime_factors(n)) << n;
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t n = (rng() >> 24) + 2;
    ASSERT_EQ(omega(n).value, oracle::distinct_prime_factors(n)) << n;
  }
}

TEST(Omega, PrimePowersAndCoprimeProducts) {
  for (std::uint64_t p : {2ull, 3ull, 65537ull, 1000003ull}) {
    std::uint64_t v = p;
    for (int k = 1; k < 4 && v < (std::uint64_t{1} << 40); ++k, v *= p) {
      EXPECT_EQ(omega(v).value, 1u) << v;
    }
  }
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t m = rng() % 100000 + 2;
    const std::uint64_t n = rng() % 100000 + 2;
    if (std::gcd(m, n) != 1) continue;
    EXPECT_EQ(omega(m * n).value, omega(m).value + omega(n).value);
  }
  // Product of two primes above 2^16 exercises the slow branch.
  EXPECT_EQ(omega(65537ull * 65539ull).value, 2u);
  EXPECT_EQ(omega(65537ull * 65537ull * 3).value, 2u);
}

TEST(Label, DispatchAndSimilarity) {
  EXPECT_EQ(label(PropertyKind::Val2, 12).value, 2u);
  EXPECT_EQ(label(PropertyKind::BitParity, 4).value, 1u);
  EXPECT_EQ(label(PropertyKind::Omega, 20).value, 2u);
  EXPECT_THROW(label(PropertyKind::Omega, 1), DomainError);

  EXPECT_TRUE(similar(PropertyKind::Val2, 3, 1));
  EXPECT_TRUE(similar(PropertyKind::BitParity, 2, 1));
  EXPECT_FALSE(similar(PropertyKind::BitParity, 3, 1));
  EXPECT_TRUE(similar(PropertyKind::Primality, 4, 1));
  EXPECT_TRUE(similar(PropertyKind::Omega, 3, 2));
}

TEST(Label, KindNames) {
  for (auto k : kAllKinds) EXPECT_EQ(parse_kind(to_string(k)), k);
  EXPECT_THROW(parse_kind("a5"), std::invalid_argument);
}
