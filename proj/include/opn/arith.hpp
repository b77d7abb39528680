#pragma once

// Divisor-sum functions: sigma(n), deficiency D(n) = 2n - sigma(n) and the
// aliquot sum s(n) = sigma(n) - n, so that D(n) + s(n) = n for every n >= 1.
// n = 0 is rejected everywhere with std::invalid_argument.

#include "opn/factorize.hpp"
#include "opn/natural.hpp"

#include <vector>

namespace opn {

struct SigmaTriple {
  Natural sigma;
  Integer deficiency;
  Natural aliquot;
};

Natural sigma(const Natural& n, const FactorizeConfig& config = {});

/// Sum of divisors from an already known factorization.
Natural sigma(const Factorization& f);

/// 1 + b + b^2 + ... + b^k, with no primality requirement on b.
Natural geometric_sum(const Natural& base, unsigned long k);

/// sigma(p^k). Rejects non-prime p and k == 0.
Natural sigma_prime_power(const Natural& p, unsigned long k);

Integer deficiency(const Natural& n, const FactorizeConfig& config = {});
Natural aliquot(const Natural& n, const FactorizeConfig& config = {});

/// All three values from a single factorization.
SigmaTriple sigma_triple(const Natural& n, const FactorizeConfig& config = {});

struct SpoofFactor {
  Natural base;
  unsigned long exponent = 0;
  /// Treated as prime for sigma even if composite.
  bool pseudo_prime = false;

  friend bool operator==(const SpoofFactor&, const SpoofFactor&) = default;
};

/// Factorization where flagged bases are evaluated as if they were prime
/// (Descartes-spoof semantics).
///
/// Invariants: bases >= 2 and pairwise coprime, exponents >= 1, unflagged
/// bases prime. Factors are kept in ascending base order.
class SpoofFactorization {
 public:
  /// Validates the invariants; throws std::invalid_argument on violation.
  explicit SpoofFactorization(std::vector<SpoofFactor> factors);

  /// Every factor of a genuine factorization, none flagged.
  static SpoofFactorization from(const Factorization& f);

  const std::vector<SpoofFactor>& factors() const { return factors_; }
  auto begin() const { return factors_.begin(); }
  auto end() const { return factors_.end(); }

  Natural value() const;

 private:
  std::vector<SpoofFactor> factors_;
};

/// Product of geometric sums over the factors, every base treated as prime.
Natural spoof_sigma(const SpoofFactorization& f);

}  // namespace opn
