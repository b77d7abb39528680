#include "opn/special_prime_sieve.hpp"
#include "opn/natural.hpp"
#include "opn/primality.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace opn {
namespace {

std::vector<std::uint64_t> primes_of(const std::vector<SieveHit>& hits) {
  std::vector<std::uint64_t> out;
  for (const auto& h : hits) out.push_back(h.p);
  return out;
}

TEST(CandidateFromRoot, SpecExamples) {
  EXPECT_EQ(candidate_from_root(3), 17u);
  EXPECT_EQ(candidate_from_root(7), 97u);
  EXPECT_EQ(candidate_from_root(5), 49u);
}

TEST(CandidateFromRoot, RejectsEvenSmallAndOverflowingRoots) {
  EXPECT_THROW(candidate_from_root(4), std::invalid_argument);
  EXPECT_THROW(candidate_from_root(1), std::invalid_argument);
  EXPECT_THROW(candidate_from_root(0), std::invalid_argument);
  EXPECT_THROW(candidate_from_root(1ull << 32), std::invalid_argument);
  EXPECT_THROW(candidate_from_root((1ull << 32) + 1), std::invalid_argument);
  EXPECT_NO_THROW(candidate_from_root((1ull << 31) + 1));
}

TEST(Sieve, TableBelowOneHundred) {
  // (p + 1)/2 for the primes below 100 that are 1 mod 8.
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> table{
      {17, 9}, {41, 21}, {73, 37}, {89, 45}, {97, 49}};
  for (const auto& [p, half] : table) {
    EXPECT_EQ((p + 1) / 2, half);
    EXPECT_EQ(is_perfect_square(Natural(half)), p == 17 || p == 97) << p;
  }
  auto hits = sieve_special_primes(100);
  ASSERT_EQ(hits.size(), 2u);
  EXPECT_EQ(hits[0], (SieveHit{17, 3, 1}));
  EXPECT_EQ(hits[1], (SieveHit{97, 7, 1}));
}

TEST(Sieve, SpecExamples) {
  EXPECT_EQ(primes_of(sieve_special_primes(18)), (std::vector<std::uint64_t>{17}));
  EXPECT_EQ(primes_of(sieve_special_primes(17)), std::vector<std::uint64_t>{});
  EXPECT_EQ(primes_of(sieve_special_primes(400)), (std::vector<std::uint64_t>{17, 97, 241, 337}));
  EXPECT_TRUE(sieve_special_primes(0).empty());
  EXPECT_TRUE(sieve_special_primes(2).empty());
}

TEST(Sieve, FirstHitsAgainstTrialDivision) {
  std::vector<std::uint64_t> want;
  for (std::uint64_t a = 3; 2 * a * a - 1 < 5000; a += 2) {
    if (oracle::is_prime_trial(2 * a * a - 1)) want.push_back(2 * a * a - 1);
  }
  EXPECT_EQ(want, (std::vector<std::uint64_t>{17, 97, 241, 337, 449, 577, 881, 1249, 3041, 3361, 3697, 4049, 4801}));
  EXPECT_EQ(primes_of(sieve_special_primes(5000)), want);
}

TEST(Sieve, RootAndScanMethodsAgree) {
  for (std::uint64_t bound : {2ull, 17ull, 18ull, 98ull, 100ull, 10000ull, 1000000ull}) {
    EXPECT_EQ(sieve_special_primes(bound), scan_special_primes(bound)) << bound;
  }
  EXPECT_EQ(sieve_special_primes(1000000).size(), 112u);
}

TEST(Sieve, ThreadedMatchesSingleThreaded) {
  auto one = sieve_special_primes(10000000, 1);
  EXPECT_EQ(sieve_special_primes(10000000, 3), one);
  EXPECT_EQ(sieve_special_primes(10000000, 16), one);
}

TEST(Sieve, HitInvariants) {
  for (const auto& h : sieve_special_primes(100000000, 2)) {
    ASSERT_EQ(h.p, 2 * h.root * h.root - 1);
    ASSERT_EQ(h.root % 2, 1u);
    ASSERT_TRUE(is_prime_u64(h.p));
    ASSERT_EQ(h.p % 16, 1u);
    ASSERT_EQ(h.p_mod16, 1u);
    ASSERT_TRUE(mod16_filter(h.p));
  }
}

TEST(Mod16Filter, SpecExamples) {
  EXPECT_FALSE(mod16_filter(41));
  EXPECT_FALSE(mod16_filter(73));
  EXPECT_FALSE(mod16_filter(89));
  EXPECT_TRUE(mod16_filter(17));
  EXPECT_TRUE(mod16_filter(97));
  EXPECT_TRUE(mod16_filter(241));
  EXPECT_THROW(mod16_filter(43), std::invalid_argument);
  EXPECT_THROW(mod16_filter(5), std::invalid_argument);
}

TEST(MinSpecialPrime, IsSeventeenAndMatchesTheSieve) {
  EXPECT_EQ(min_special_prime(), 17u);
  for (std::uint64_t bound : {18ull, 100ull, 1000ull}) {
    EXPECT_EQ(sieve_special_primes(bound).front().p, min_special_prime());
  }
}

}  // namespace
}  // namespace opn
