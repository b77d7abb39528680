#include "opn/factorize.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <stdexcept>

namespace opn {

namespace {

// Cofactors left after trial division below this bound have no prime
// factor smaller than it.
constexpr std::uint32_t kTrialBound = 1u << 16;

std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

void factor_word(std::uint64_t n, std::vector<PrimePower>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back({from_u64(n), 1});
    return;
  }
  const std::uint64_t d = pollard_brent_u64(n);
  factor_word(d, out);
  factor_word(n / d, out);
}

// One Brent-rho attempt with polynomial x^2 + c. Returns 0 on failure.
Natural brent_attempt(const Natural& n, unsigned long c, std::uint64_t budget) {
  constexpr std::uint64_t kBatch = 128;
  Natural y = 2, x, ys, q = 1, g = 1;
  std::uint64_t r = 1, steps = 0;
  auto f = [&](Natural& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) f(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
        f(y);
        q = q * abs(x - y) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      steps += kBatch;
      if (steps > budget) return 0;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      f(ys);
      Natural diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g == n ? Natural(0) : g;
}

// Largest k > 1 with n = root^k, if any; roots are known to exceed kTrialBound.
std::optional<std::pair<Natural, unsigned long>> perfect_power(const Natural& n) {
  const unsigned long bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long k = bits / 16; k >= 2; --k) {
    Natural root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) return std::make_pair(root, k);
  }
  return std::nullopt;
}

void factor_big(const Natural& n, unsigned long multiplicity, const FactorizeConfig& config,
                std::vector<PrimePower>& out) {
  if (n == 1) return;
  if (auto word = to_u64(n)) {
    for (const auto& [p, e] : factorize_u64(*word)) out.push_back({p, e * multiplicity});
    return;
  }
  if (primality(n, config.primality) != Primality::composite) {
    out.push_back({n, multiplicity});
    return;
  }
  if (auto power = perfect_power(n)) {
    factor_big(power->first, multiplicity * power->second, config, out);
    return;
  }
  for (unsigned attempt = 0; attempt < config.rho_attempts; ++attempt) {
    Natural d = brent_attempt(n, 1 + attempt, config.rho_iterations);
    if (d != 0) {
      factor_big(d, multiplicity, config, out);
      factor_big(n / d, multiplicity, config, out);
      return;
    }
  }
  throw FactorizationEffortExceeded(n);
}

}  // namespace

Factorization Factorization::from_factors(std::vector<PrimePower> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  Factorization f;
  for (auto& pp : factors) {
    if (pp.exponent == 0) continue;
    if (!f.factors_.empty() && f.factors_.back().prime == pp.prime) {
      f.factors_.back().exponent += pp.exponent;
    } else {
      f.factors_.push_back(std::move(pp));
    }
  }
  return f;
}

Natural Factorization::value() const {
  Natural v = 1;
  for (const auto& [p, e] : factors_) v *= pow(p, e);
  return v;
}

Factorization Factorization::raised(unsigned long by) const {
  Factorization f = *this;
  for (auto& pp : f.factors_) pp.exponent *= by;
  if (by == 0) f.factors_.clear();
  return f;
}

FactorizationEffortExceeded::FactorizationEffortExceeded(const Natural& cofactor)
    : std::runtime_error("factorization effort exceeded on composite cofactor " + cofactor.get_str()),
      cofactor_(cofactor) {}

std::uint64_t pollard_brent_u64(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  constexpr std::uint64_t kBatch = 128;
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t v) {
      std::uint64_t sq = mulmod(v, v, n);
      return sq >= n - c ? sq - (n - c) : sq + c;  // (v^2 + c) mod n, c < n
    };
    std::uint64_t y = 2, x = 2, ys = 2, q = 1, g = 1, r = 1;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mulmod(q, abs_diff(x, y), n);
        }
        g = std::gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(abs_diff(x, ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

Factorization factorize_u64(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cannot factorize 0");
  std::vector<PrimePower> out;
  for (std::uint32_t p : small_primes()) {
    if (static_cast<std::uint64_t>(p) * p > n || p >= kTrialBound) break;
    unsigned long e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  }
  factor_word(n, out);
  return Factorization::from_factors(std::move(out));
}

Factorization factorize(const Natural& n, const FactorizeConfig& config) {
  if (sgn(n) <= 0) throw std::invalid_argument("cannot factorize " + n.get_str());
  if (auto word = to_u64(n)) return factorize_u64(*word);

  Natural rest = n;
  std::vector<PrimePower> out;
  for (std::uint32_t p : small_primes()) {
    if (p >= kTrialBound) break;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e) out.push_back({p, e});
    if (to_u64(rest)) break;
  }
  factor_big(rest, 1, config, out);
  return Factorization::from_factors(std::move(out));
}

}  // namespace opn
