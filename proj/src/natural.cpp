#include "opn/natural.hpp"

#include <stdexcept>
#include <string>

namespace opn {

Natural parse_natural(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a non-negative decimal integer: '" + std::string(text) + "'");
    }
  }
  return Natural(std::string(text), 10);
}

std::optional<std::uint64_t> to_u64(const mpz_class& v) {
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) return std::nullopt;
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, v.get_mpz_t());
  return out;
}

Natural isqrt(const Natural& n) {
  if (sgn(n) < 0) throw std::invalid_argument("isqrt of a negative number");
  Natural r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Natural& n) {
  if (sgn(n) < 0) return false;
  const Natural r = isqrt(n);
  return r * r == n;
}

}  // namespace opn
