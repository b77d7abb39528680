#pragma once

// Exact checks of the identity chain satisfied by any decomposition
// n = p^k m^2 with sigma(p^k) sigma(m^2) = 2 p^k m^2:
//
//   sigma(m^2)/p^k = 2m^2/sigma(p^k) = D(m^2)/s(p^k) = s(m^2)/(D(p^k)/2)
//                  = gcd(m^2, sigma(m^2)) = g,
//   D(p^k) D(m^2) / (s(p^k) s(m^2)) = 2,
//   2 D(m^2) s(m^2) / (D(p^k) s(p^k)) = g^2.

#include "opn/arith.hpp"
#include "opn/natural.hpp"

#include <optional>
#include <string>
#include <vector>

namespace opn {

/// Candidate (p, k, m) for n = p^k m^2.
struct EulerTriple {
  Natural p;
  unsigned long k = 0;
  Natural m;

  Natural n() const;
};

enum class SigmaMode {
  /// sigma evaluated on genuine factorizations; p must be prime.
  true_sigma,
  /// sigma(p^k) = 1 + p + ... + p^k whether or not p is prime.
  spoof,
};

struct FormCheck {
  bool ok = true;
  std::vector<std::string> reasons;

  explicit operator bool() const { return ok; }
};

/// p > 1, p = 1 (mod 4), k = 1 (mod 4), m odd, gcd(p, m) = 1 and, in
/// true-sigma mode, p prime. Failures are listed, never thrown.
FormCheck validate_euler_form(const EulerTriple& t, SigmaMode mode);

/// sigma(p^k) and sigma(m^2) under the chosen evaluation.
struct DecompositionSigmas {
  Natural p_power;   // p^k
  Natural m_square;  // m^2
  Natural sigma_p_power;
  Natural sigma_m_square;
};

DecompositionSigmas evaluate_sigmas(const EulerTriple& t, SigmaMode mode);

/// sigma(p^k) * sigma(m^2) == 2 p^k m^2.
bool is_perfect_decomposition(const EulerTriple& t, SigmaMode mode);
bool is_perfect_decomposition(const DecompositionSigmas& s);

struct IdentityReport {
  Natural g;          // gcd(m^2, sigma(m^2))
  Rational q1;        // sigma(m^2) / p^k
  Rational q2;        // 2 m^2 / sigma(p^k)
  Rational q3;        // D(m^2) / s(p^k)
  Rational q4;        // s(m^2) / (D(p^k) / 2)
  Rational q5;        // g
  /// D(p^k) D(m^2) / (s(p^k) s(m^2)); empty when s(m^2) = 0 (m = 1).
  std::optional<Rational> ratio;
  Rational star_lhs;  // 2 D(m^2) s(m^2) / (D(p^k) s(p^k))
  bool perfect = false;
  bool all_identities_hold = false;

  Integer deficiency_p_power;
  Natural aliquot_p_power;
  Integer deficiency_m_square;
  Natural aliquot_m_square;
};

/// Always produces a report; on non-perfect inputs the identities are
/// expected to fail. Rejects (std::invalid_argument) triples with m = 0,
/// p < 2, k = 0, or odd D(p^k).
IdentityReport compute_identity_report(const EulerTriple& t, SigmaMode mode);
IdentityReport compute_identity_report(const DecompositionSigmas& s);

/// A spoof factorization split into its p^k part and its m^2 part.
struct SpoofDecomposition {
  EulerTriple triple;
  /// Whether any base is flagged pseudo-prime.
  bool uses_pseudo_primes = false;
  DecompositionSigmas sigmas;
};

/// Exactly one factor must carry an odd exponent; it becomes p^k and every
/// other factor contributes base^(e/2) to m. Both sigmas are spoof-evaluated.
SpoofDecomposition split_spoof(const SpoofFactorization& f);

}  // namespace opn
