#include <gtest/gtest.h>

#include <cmath>

#include "gammalat/group.hpp"
#include "gammalat/primes.hpp"
#include "oracles.hpp"

using namespace gammalat;

TEST(Primality, AgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime_u64(n), oracle::is_prime_naive(n)) << n;
  EXPECT_TRUE(is_prime_u64(18446744073709551557ULL));
  EXPECT_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(PowMod, Basics) {
  EXPECT_EQ(pow_mod(3, 0, 7), 1u);
  EXPECT_EQ(pow_mod(3, 6, 7), 1u);
  EXPECT_EQ(pow_mod(2, 64, 18446744073709551557ULL), 59u);
}

TEST(Qualifying, Examples) {
  EXPECT_FALSE(is_qualifying(3, 19));
  EXPECT_TRUE(is_qualifying(3, 7));
  EXPECT_TRUE(is_qualifying(3, 13));
  EXPECT_THROW(is_qualifying(4, 7), InvalidInput);
  EXPECT_THROW(is_qualifying(3, 9), InvalidInput);
  EXPECT_THROW(is_qualifying(3, 3), InvalidInput);
}

TEST(FindQualifying, Examples) {
  EXPECT_EQ(find_qualifying(3, 40).qualifying, (std::vector<std::uint64_t>{7, 13, 31}));
  EXPECT_TRUE(find_qualifying(3, 7).qualifying.empty());
}

TEST(FindQualifying, AgreesWithEnumerationBelow10000) {
  for (std::uint64_t p : {3, 5, 7}) {
    const PrimeSearchResult r = find_qualifying(p, 10000);
    std::vector<std::uint64_t> expected;
    std::uint64_t scanned = 0;
    for (std::uint64_t q = 2; q < 10000; ++q) {
      if (!oracle::is_prime_naive(q) || q == p) continue;
      if (q % p == 1) ++scanned;
      if (oracle::qualifies_by_enumeration(p, q)) expected.push_back(q);
    }
    EXPECT_EQ(r.qualifying, expected) << p;
    EXPECT_EQ(r.scanned, scanned) << p;
  }
}

TEST(FindQualifying, PrefixProperty) {
  const auto big = find_qualifying(5, 20000).qualifying;
  for (std::uint64_t bound : {100, 1000, 5000}) {
    const auto small = find_qualifying(5, bound).qualifying;
    ASSERT_LE(small.size(), big.size());
    EXPECT_TRUE(std::equal(small.begin(), small.end(), big.begin()));
    if (!small.empty()) EXPECT_LT(small.back(), bound);
  }
}

TEST(Density, WithinTolerance) {
  const DensityReport r3 = density_report(3, 100000);
  EXPECT_NEAR(r3.observed, 0.444, 0.05);
  EXPECT_NEAR(r3.expected, 4.0 / 9.0, 1e-12);
  const DensityReport r5 = density_report(5, 100000);
  EXPECT_NEAR(r5.observed, 0.64, 0.06);
  EXPECT_THROW(density_report(3, 100), InvalidInput);
}
