#pragma once

// Special-prime candidates for the case sigma(m^2)/p^k a square: then k = 1,
// (p + 1)/2 is an odd square a^2, so p = 2a^2 - 1 with a odd, and p = 1 (mod 16).

#include <cstdint>
#include <vector>

namespace opn {

struct SieveHit {
  std::uint64_t p = 0;
  std::uint64_t root = 0;  // odd a with (p + 1) / 2 = a^2
  unsigned p_mod16 = 0;

  friend bool operator==(const SieveHit&, const SieveHit&) = default;
};

/// 2a^2 - 1. Rejects even a, a < 3, and a whose candidate overflows 64 bits.
std::uint64_t candidate_from_root(std::uint64_t a);

/// Primes p < bound of the form 2a^2 - 1, a odd, ascending. Enumerates roots
/// (O(sqrt(bound)) primality tests), split across `threads` workers.
std::vector<SieveHit> sieve_special_primes(std::uint64_t bound, unsigned threads = 1);

/// Same result by scanning every prime p < bound with p = 1 (mod 8) and
/// testing (p + 1)/2 for squareness. Requires bound <= 2^32.
std::vector<SieveHit> scan_special_primes(std::uint64_t bound);

/// p = 1 (mod 16). Throws std::invalid_argument unless p = 1 (mod 8).
bool mod16_filter(std::uint64_t p);

/// Smallest admissible special prime, found by walking the roots.
std::uint64_t min_special_prime();

}  // namespace opn
