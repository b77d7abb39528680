#include "opn/primality.hpp"

#include <array>
#include <stdexcept>

namespace opn {

namespace {

constexpr std::array<std::uint32_t, 16> kTinyPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

// Jim Sinclair's bases: a complete strong-probable-prime witness set for n < 2^64.
constexpr std::array<std::uint64_t, 7> kWitnesses64{2, 325, 9375, 28178, 450775, 9780504, 1795265022};

bool strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
  a %= n;
  if (a == 0) return true;
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool strong_probable_prime(const Natural& n, const Natural& a, const Natural& d, unsigned long s) {
  const Natural n_minus_1 = n - 1;
  Natural x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

}  // namespace

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint32_t p : kTinyPrimes) {
    if (n % p == 0) return n == p;
  }
  if (n < 59 * 59) return true;

  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kWitnesses64) {
    if (!strong_probable_prime(n, a, d, s)) return false;
  }
  return true;
}

Primality primality(const Natural& n, const PrimalityConfig& config) {
  if (sgn(n) <= 0) return Primality::composite;
  if (auto small = to_u64(n)) {
    return is_prime_u64(*small) ? Primality::prime : Primality::composite;
  }

  // n > 2^64, so it cannot equal any of these.
  for (std::uint32_t p : small_primes()) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return Primality::composite;
  }

  Natural d = n - 1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(config.seed);
  const Natural span = n - 3;
  for (unsigned round = 0; round < config.rounds; ++round) {
    Natural a = rng.get_z_range(span) + 2;  // [2, n - 2]
    if (!strong_probable_prime(n, a, d, s)) return Primality::composite;
  }
  return Primality::probable_prime;
}

bool is_prime(const Natural& n, const PrimalityConfig& config) {
  return primality(n, config) != Primality::composite;
}

std::vector<std::uint32_t> primes_below(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit <= 2) return out;
  out.push_back(2);
  // composite[i] marks 2i + 1.
  const std::uint64_t half = (static_cast<std::uint64_t>(limit) + 1) / 2;
  std::vector<std::uint8_t> composite(half, 0);
  for (std::uint64_t i = 1; i < half; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    if (p >= limit) break;
    out.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t j = (p * p) / 2; j < half; j += p) composite[j] = 1;
  }
  return out;
}

std::span<const std::uint32_t> small_primes() {
  static const std::vector<std::uint32_t> table = primes_below(1000000);
  return table;
}

}  // namespace opn
