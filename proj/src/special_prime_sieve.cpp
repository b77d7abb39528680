#include "opn/special_prime_sieve.hpp"

#include "opn/natural.hpp"
#include "opn/primality.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

namespace opn {

namespace {

// Largest a with 2a^2 - 1 representable in 64 bits.
constexpr std::uint64_t kMaxRoot = 3037000499ULL;

SieveHit make_hit(std::uint64_t p, std::uint64_t root) { return {p, root, static_cast<unsigned>(p % 16)}; }

// Odd roots a in [first, last], with 2a^2 - 1 < bound.
void sieve_roots(std::uint64_t first, std::uint64_t last, std::uint64_t bound, std::vector<SieveHit>& out) {
  for (std::uint64_t a = first; a <= last; a += 2) {
    const std::uint64_t p = candidate_from_root(a);
    if (p >= bound) break;
    if (is_prime_u64(p)) out.push_back(make_hit(p, a));
  }
}

}  // namespace

std::uint64_t candidate_from_root(std::uint64_t a) {
  if (a % 2 == 0) throw std::invalid_argument("root must be odd, got " + std::to_string(a));
  if (a < 3) throw std::invalid_argument("root must be at least 3, got " + std::to_string(a));
  if (a > kMaxRoot) throw std::invalid_argument("2a^2 - 1 overflows 64 bits for a = " + std::to_string(a));
  return 2 * a * a - 1;
}

std::vector<SieveHit> sieve_special_primes(std::uint64_t bound, unsigned threads) {
  std::vector<SieveHit> hits;
  if (bound <= 17) return hits;

  // Largest odd root whose candidate is below the bound.
  std::uint64_t last = std::min<std::uint64_t>(kMaxRoot, *to_u64(isqrt(from_u64(bound / 2))) + 1);
  while (last >= 3 && (last % 2 == 0 || candidate_from_root(last) >= bound)) --last;
  if (last < 3) return hits;

  const std::uint64_t roots = (last - 3) / 2 + 1;
  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, roots));
  if (threads == 1) {
    sieve_roots(3, last, bound, hits);
    return hits;
  }

  // Contiguous root ranges keep each worker's hits ascending.
  std::vector<std::vector<SieveHit>> parts(threads);
  const std::uint64_t per = (roots + threads - 1) / threads;
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = t * per, hi = std::min(roots, lo + per);
      if (lo >= hi) break;
      workers.emplace_back([=, &part = parts[t]] { sieve_roots(3 + 2 * lo, 3 + 2 * (hi - 1), bound, part); });
    }
  }
  for (auto& part : parts) hits.insert(hits.end(), part.begin(), part.end());
  return hits;
}

std::vector<SieveHit> scan_special_primes(std::uint64_t bound) {
  if (bound > (1ULL << 32)) throw std::invalid_argument("scan bound must be at most 2^32");
  std::vector<SieveHit> hits;
  if (bound < 2) return hits;
  for (std::uint32_t p : primes_below(static_cast<std::uint32_t>(std::min<std::uint64_t>(bound, 0xffffffffULL)))) {
    if (p % 8 != 1) continue;
    const Natural half = Natural(p / 2 + 1);  // (p + 1) / 2
    const Natural root = isqrt(half);
    if (root * root == half) hits.push_back(make_hit(p, *to_u64(root)));
  }
  return hits;
}

bool mod16_filter(std::uint64_t p) {
  if (p % 8 != 1) throw std::invalid_argument(std::to_string(p) + " is not 1 mod 8");
  return p % 16 == 1;
}

std::uint64_t min_special_prime() {
  for (std::uint64_t a = 3;; a += 2) {
    const std::uint64_t p = candidate_from_root(a);
    if (is_prime_u64(p)) return p;
  }
}

}  // namespace opn
