#pragma once

// Test-only reference implementations. Deliberately naive and independent of
// the library code paths they check.

#include <cstdint>
#include <utility>
#include <vector>

namespace opn::oracle {

/// Sum of divisors by pairing d with n/d up to sqrt(n).
inline unsigned __int128 divisor_sum(std::uint64_t n) {
  unsigned __int128 total = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      total += d;
      if (d != n / d) total += n / d;
    }
  }
  return total;
}

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::pair<std::uint64_t, unsigned>> factor_trial(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// sum_{i=0}^{k} p^i mod m, term by term.
inline std::uint64_t geometric_sum_mod_naive(std::uint64_t p, std::uint64_t k, std::uint64_t m) {
  std::uint64_t term = 1 % m, total = 0;
  for (std::uint64_t i = 0; i <= k; ++i) {
    total = (total + term) % m;
    term = static_cast<std::uint64_t>(static_cast<unsigned __int128>(term) * (p % m) % m);
  }
  return total;
}

}  // namespace opn::oracle
