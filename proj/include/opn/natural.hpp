#pragma once

// Exact integer types shared by every module. All arithmetic in the toolkit
// goes through these; there is no floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace opn {

/// Arbitrary-precision non-negative integer.
using Natural = mpz_class;
/// Arbitrary-precision signed integer (deficiency may be negative).
using Integer = mpz_class;
/// Exact rational, always kept in lowest terms.
using Rational = mpq_class;

/// Parses a plain decimal string of digits. Signs, whitespace and
/// prefixes are rejected with std::invalid_argument.
Natural parse_natural(std::string_view text);

inline std::string to_string(const mpz_class& v) { return v.get_str(); }

/// "a/b", or just "a" when the denominator is 1.
inline std::string to_string(const mpq_class& v) { return v.get_str(); }

/// Some(v) when v fits in an unsigned 64-bit word.
std::optional<std::uint64_t> to_u64(const mpz_class& v);

inline Natural from_u64(std::uint64_t v) {
  Natural out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return out;
}

/// Floor of the square root.
Natural isqrt(const Natural& n);

/// Exact squareness test: r = isqrt(n), then r*r == n.
bool is_perfect_square(const Natural& n);

/// b^e for a machine exponent.
inline Natural pow(const Natural& b, unsigned long e) {
  Natural out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

/// Least non-negative residue of n modulo m (m > 0), also for negative n.
inline unsigned long mod_ui(const mpz_class& n, unsigned long m) {
  return mpz_fdiv_ui(n.get_mpz_t(), m);
}

}  // namespace opn
