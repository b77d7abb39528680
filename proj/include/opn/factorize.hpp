#pragma once

#include "opn/natural.hpp"
#include "opn/primality.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace opn {

struct PrimePower {
  Natural prime;
  unsigned long exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization: primes strictly ascending, exponents >= 1,
/// empty for 1.
class Factorization {
 public:
  Factorization() = default;

  /// Sorts, merges equal primes and drops zero exponents. Does not check
  /// primality of the bases.
  static Factorization from_factors(std::vector<PrimePower> factors);

  const std::vector<PrimePower>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  std::size_t size() const { return factors_.size(); }
  auto begin() const { return factors_.begin(); }
  auto end() const { return factors_.end(); }

  /// Product of prime^exponent.
  Natural value() const;

  /// Every exponent multiplied by `by` (factorization of value()^by).
  Factorization raised(unsigned long by) const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> factors_;
};

/// Thrown when a composite cofactor above 2^64 survives the Pollard-rho
/// iteration budget. The toolkit never returns a partial factorization.
class FactorizationEffortExceeded : public std::runtime_error {
 public:
  FactorizationEffortExceeded(const Natural& cofactor);
  const Natural& cofactor() const { return cofactor_; }

 private:
  Natural cofactor_;
};

struct FactorizeConfig {
  /// Brent-rho iterations per attempt on cofactors wider than 64 bits.
  std::uint64_t rho_iterations = 1u << 20;
  /// Number of polynomial constants tried before giving up.
  unsigned rho_attempts = 8;
  PrimalityConfig primality{};
};

/// Throws std::invalid_argument for n == 0.
Factorization factorize(const Natural& n, const FactorizeConfig& config = {});

/// Fast path for machine words; never gives up.
Factorization factorize_u64(std::uint64_t n);

/// A nontrivial factor of the odd composite n (Brent's cycle detection).
std::uint64_t pollard_brent_u64(std::uint64_t n);

}  // namespace opn
