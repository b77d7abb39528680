#include "opn/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace opn {

namespace {

void require_positive(const Natural& n, const char* what) {
  if (sgn(n) <= 0) throw std::invalid_argument(std::string(what) + " requires n >= 1, got " + n.get_str());
}

}  // namespace

Natural geometric_sum(const Natural& base, unsigned long k) {
  if (base == 1) return Natural(k + 1);
  Natural num = pow(base, k + 1) - 1;
  Natural den = base - 1;
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return num;
}

Natural sigma(const Factorization& f) {
  Natural total = 1;
  for (const auto& [p, e] : f) total *= geometric_sum(p, e);
  return total;
}

Natural sigma(const Natural& n, const FactorizeConfig& config) {
  require_positive(n, "sigma");
  return sigma(factorize(n, config));
}

Natural sigma_prime_power(const Natural& p, unsigned long k) {
  if (k == 0) throw std::invalid_argument("sigma_prime_power requires k >= 1");
  if (!is_prime(p)) throw std::invalid_argument("sigma_prime_power: " + p.get_str() + " is not prime");
  return geometric_sum(p, k);
}

SigmaTriple sigma_triple(const Natural& n, const FactorizeConfig& config) {
  require_positive(n, "sigma_triple");
  Natural s = sigma(factorize(n, config));
  Integer d = 2 * n - s;
  Natural a = s - n;
  return {std::move(s), std::move(d), std::move(a)};
}

Integer deficiency(const Natural& n, const FactorizeConfig& config) {
  require_positive(n, "deficiency");
  return 2 * n - sigma(n, config);
}

Natural aliquot(const Natural& n, const FactorizeConfig& config) {
  require_positive(n, "aliquot");
  return sigma(n, config) - n;
}

SpoofFactorization::SpoofFactorization(std::vector<SpoofFactor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const SpoofFactor& a, const SpoofFactor& b) { return a.base < b.base; });
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    if (f.base < 2) throw std::invalid_argument("spoof base must be >= 2, got " + f.base.get_str());
    if (f.exponent == 0) throw std::invalid_argument("spoof exponent must be >= 1 for base " + f.base.get_str());
    if (!f.pseudo_prime && !is_prime(f.base)) {
      throw std::invalid_argument("base " + f.base.get_str() + " is not prime and not flagged pseudo-prime");
    }
    for (std::size_t j = 0; j < i; ++j) {
      Natural g;
      mpz_gcd(g.get_mpz_t(), f.base.get_mpz_t(), factors_[j].base.get_mpz_t());
      if (g != 1) {
        throw std::invalid_argument("spoof bases " + factors_[j].base.get_str() + " and " + f.base.get_str() +
                                    " are not coprime");
      }
    }
  }
}

SpoofFactorization SpoofFactorization::from(const Factorization& f) {
  std::vector<SpoofFactor> out;
  out.reserve(f.size());
  for (const auto& [p, e] : f) out.push_back({p, e, false});
  return SpoofFactorization(std::move(out));
}

Natural SpoofFactorization::value() const {
  Natural v = 1;
  for (const auto& f : factors_) v *= pow(f.base, f.exponent);
  return v;
}

Natural spoof_sigma(const SpoofFactorization& f) {
  Natural total = 1;
  for (const auto& factor : f) total *= geometric_sum(factor.base, factor.exponent);
  return total;
}

}  // namespace opn
