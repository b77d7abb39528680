#pragma once

#include "opn/natural.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace opn {

enum class Primality {
  composite,
  /// Proven prime: trial division or the deterministic 64-bit witness set.
  prime,
  /// Above 64 bits: survived trial division by every prime below 10^6 and
  /// `rounds` Miller-Rabin rounds.
  probable_prime,
};

struct PrimalityConfig {
  /// Miller-Rabin rounds for inputs wider than 64 bits.
  unsigned rounds = 32;
  /// Seed for the random bases used above 64 bits, so answers are reproducible.
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

/// Deterministic primality for 64-bit n (trial division below 2^16 for small
/// n, then strong probable-prime tests with a complete witness set).
bool is_prime_u64(std::uint64_t n);

Primality primality(const Natural& n, const PrimalityConfig& config = {});

/// True for proven and probable primes alike.
bool is_prime(const Natural& n, const PrimalityConfig& config = {});

/// All primes strictly below `limit`, ascending (odd-only sieve of Eratosthenes).
std::vector<std::uint32_t> primes_below(std::uint32_t limit);

/// Cached primes below 10^6, used by the >64-bit trial division tier.
std::span<const std::uint32_t> small_primes();

/// (a * b) mod m without overflow.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

}  // namespace opn
