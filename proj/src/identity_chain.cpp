#include "opn/identity_chain.hpp"

#include <stdexcept>

namespace opn {

namespace {

Natural gcd(const Natural& a, const Natural& b) {
  Natural g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Rational fraction(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

void require_shape(const EulerTriple& t) {
  if (t.p < 2) throw std::invalid_argument("p must be at least 2, got " + t.p.get_str());
  if (t.k == 0) throw std::invalid_argument("k must be at least 1");
  if (sgn(t.m) <= 0) throw std::invalid_argument("m must be positive, got " + t.m.get_str());
}

}  // namespace

Natural EulerTriple::n() const { return pow(p, k) * m * m; }

FormCheck validate_euler_form(const EulerTriple& t, SigmaMode mode) {
  FormCheck check;
  auto fail = [&](std::string reason) {
    check.ok = false;
    check.reasons.push_back(std::move(reason));
  };
  if (t.p < 2) fail("p = " + t.p.get_str() + " is less than 2");
  if (mod_ui(t.p, 4) != 1) fail("p = " + t.p.get_str() + " is not 1 mod 4");
  if (t.k % 4 != 1) fail("k = " + std::to_string(t.k) + " is not 1 mod 4");
  if (sgn(t.m) <= 0) {
    fail("m = " + t.m.get_str() + " is not positive");
  } else if (mod_ui(t.m, 2) == 0) {
    fail("m = " + t.m.get_str() + " is even");
  }
  if (sgn(t.p) > 0 && sgn(t.m) > 0 && gcd(t.p, t.m) != 1) {
    fail("gcd(p, m) = " + gcd(t.p, t.m).get_str() + " is not 1");
  }
  if (mode == SigmaMode::true_sigma && t.p >= 2 && !is_prime(t.p)) {
    fail("p = " + t.p.get_str() + " is not prime");
  }
  return check;
}

DecompositionSigmas evaluate_sigmas(const EulerTriple& t, SigmaMode mode) {
  require_shape(t);
  DecompositionSigmas s;
  s.p_power = pow(t.p, t.k);
  s.m_square = t.m * t.m;
  s.sigma_p_power = mode == SigmaMode::true_sigma ? sigma_prime_power(t.p, t.k) : geometric_sum(t.p, t.k);
  s.sigma_m_square = sigma(factorize(t.m).raised(2));
  return s;
}

bool is_perfect_decomposition(const DecompositionSigmas& s) {
  return s.sigma_p_power * s.sigma_m_square == 2 * s.p_power * s.m_square;
}

bool is_perfect_decomposition(const EulerTriple& t, SigmaMode mode) {
  return is_perfect_decomposition(evaluate_sigmas(t, mode));
}

IdentityReport compute_identity_report(const DecompositionSigmas& s) {
  IdentityReport r;
  r.deficiency_p_power = 2 * s.p_power - s.sigma_p_power;
  r.aliquot_p_power = s.sigma_p_power - s.p_power;
  r.deficiency_m_square = 2 * s.m_square - s.sigma_m_square;
  r.aliquot_m_square = s.sigma_m_square - s.m_square;

  if (mod_ui(r.deficiency_p_power, 2) != 0) {
    throw std::invalid_argument("D(p^k) = " + r.deficiency_p_power.get_str() + " is odd; D(p^k)/2 is undefined");
  }
  if (sgn(r.deficiency_p_power) == 0 || sgn(r.aliquot_p_power) == 0 || sgn(s.sigma_p_power) == 0) {
    throw std::invalid_argument("degenerate prime-power part: a denominator vanishes");
  }

  r.g = gcd(s.m_square, s.sigma_m_square);
  r.q1 = fraction(s.sigma_m_square, s.p_power);
  r.q2 = fraction(2 * s.m_square, s.sigma_p_power);
  r.q3 = fraction(r.deficiency_m_square, r.aliquot_p_power);
  r.q4 = fraction(2 * r.aliquot_m_square, r.deficiency_p_power);
  r.q5 = Rational(r.g);
  if (sgn(r.aliquot_m_square) != 0) {
    r.ratio = fraction(r.deficiency_p_power * r.deficiency_m_square, r.aliquot_p_power * r.aliquot_m_square);
  }
  r.star_lhs = fraction(2 * r.deficiency_m_square * r.aliquot_m_square, r.deficiency_p_power * r.aliquot_p_power);

  r.perfect = is_perfect_decomposition(s);
  r.all_identities_hold = r.q1 == r.q2 && r.q2 == r.q3 && r.q3 == r.q4 && r.q4 == r.q5 && r.ratio.has_value() &&
                          *r.ratio == 2 && r.star_lhs == Rational(r.g * r.g);
  return r;
}

IdentityReport compute_identity_report(const EulerTriple& t, SigmaMode mode) {
  return compute_identity_report(evaluate_sigmas(t, mode));
}

SpoofDecomposition split_spoof(const SpoofFactorization& f) {
  const SpoofFactor* special = nullptr;
  for (const auto& factor : f) {
    if (factor.exponent % 2 == 1) {
      if (special) {
        throw std::invalid_argument("more than one base has an odd exponent (" + special->base.get_str() + ", " +
                                    factor.base.get_str() + ")");
      }
      special = &factor;
    }
  }
  if (!special) throw std::invalid_argument("no base has an odd exponent, so there is no special prime");

  SpoofDecomposition d;
  d.triple.p = special->base;
  d.triple.k = special->exponent;
  d.triple.m = 1;
  d.sigmas.sigma_m_square = 1;
  for (const auto& factor : f) {
    d.uses_pseudo_primes = d.uses_pseudo_primes || factor.pseudo_prime;
    if (&factor == special) continue;
    d.triple.m *= pow(factor.base, factor.exponent / 2);
    d.sigmas.sigma_m_square *= geometric_sum(factor.base, factor.exponent);
  }
  d.sigmas.p_power = pow(d.triple.p, d.triple.k);
  d.sigmas.m_square = d.triple.m * d.triple.m;
  d.sigmas.sigma_p_power = geometric_sum(d.triple.p, d.triple.k);
  return d;
}

}  // namespace opn
