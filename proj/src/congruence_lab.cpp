#include "opn/congruence_lab.hpp"

#include "opn/primality.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace opn {

namespace {

// Residue maps indexed by [p mod 8 == 5][k mod 8 == 5].
constexpr int kSigmaPk[2][2] = {{2, 6}, {6, 2}};
constexpr int kDeficiencyPk[2][2] = {{0, 4}, {4, 0}};
constexpr int kAliquotPk[2][2] = {{1, 5}, {1, 5}};

// Indexed by [sigma(m^2) mod 4 == 3].
constexpr int kDeficiencyM2[2] = {1, 3};
constexpr int kAliquotM2[2] = {0, 2};

constexpr std::int64_t kMaxCertifyModulus = 4096;

int class_index_mod8(int r, const char* name) {
  if (r == 1) return 0;
  if (r == 5) return 1;
  throw std::invalid_argument(std::string(name) + " mod 8 must be 1 or 5, got " + std::to_string(r));
}

int class_index_mod4(int r) {
  if (r == 1) return 0;
  if (r == 3) return 1;
  throw std::invalid_argument("sigma(m^2) mod 4 must be 1 or 3, got " + std::to_string(r));
}

struct OraclePartial {
  std::uint64_t primes_tested = 0;
  std::uint64_t checks = 0;
  std::vector<OracleMismatch> mismatches;
  ResidueTable residues;
};

void sweep(std::span<const std::uint32_t> primes, const std::vector<std::uint64_t>& ks, OraclePartial& out) {
  for (std::uint64_t p : primes) {
    ++out.primes_tested;
    for (std::uint64_t k : ks) {
      const std::uint64_t sigma16 = geometric_sum_mod(p, k, 16);
      const std::uint64_t pk16 = powmod(p, k, 16);
      const std::uint64_t def16 = (2 * pk16 + 16 - sigma16) % 16;
      const std::uint64_t ali16 = (sigma16 + 16 - pk16) % 16;

      const int pm = static_cast<int>(p % 8), km = static_cast<int>(k % 8);
      auto compare = [&](const char* quantity, const ResidueClass& expected, std::uint64_t observed16) {
        const int observed = static_cast<int>(observed16 % 8);
        if (expected.value() != observed) {
          out.mismatches.push_back({p, k, quantity, static_cast<int>(expected.value()), observed});
        }
      };
      compare("sigma", sigma_pk_mod8(pm, km), sigma16);
      compare("deficiency", deficiency_pk_mod8(pm, km), def16);
      compare("aliquot", aliquot_pk_mod8(pm, km), ali16);
      ++out.checks;
      ++out.residues[{static_cast<int>(p % 16), static_cast<int>(k % 16)}]
                    [{static_cast<int>(sigma16), static_cast<int>(def16), static_cast<int>(ali16)}];
    }
  }
}

std::set<std::int64_t> form_residues(const LinearForm& form, std::int64_t modulus) {
  std::set<std::int64_t> out;
  for (std::int64_t x = 0; x < modulus; ++x) {
    out.insert(((form.coefficient * x + form.offset) % modulus + modulus) % modulus);
  }
  return out;
}

}  // namespace

ResidueClass::ResidueClass(std::int64_t value, std::int64_t modulus) : modulus_(modulus) {
  if (modulus <= 0) throw std::invalid_argument("modulus must be positive, got " + std::to_string(modulus));
  value_ = ((value % modulus) + modulus) % modulus;
}

std::string to_string(const ResidueClass& r) {
  return std::to_string(r.value()) + " (mod " + std::to_string(r.modulus()) + ")";
}

ResidueClass sigma_pk_mod8(int p_mod8, int k_mod8) {
  return {kSigmaPk[class_index_mod8(p_mod8, "p")][class_index_mod8(k_mod8, "k")], 8};
}

ResidueClass deficiency_pk_mod8(int p_mod8, int k_mod8) {
  return {kDeficiencyPk[class_index_mod8(p_mod8, "p")][class_index_mod8(k_mod8, "k")], 8};
}

ResidueClass aliquot_pk_mod8(int p_mod8, int k_mod8) {
  return {kAliquotPk[class_index_mod8(p_mod8, "p")][class_index_mod8(k_mod8, "k")], 8};
}

ResidueClass deficiency_m2_mod4(int sigma_m2_mod4) { return {kDeficiencyM2[class_index_mod4(sigma_m2_mod4)], 4}; }

ResidueClass aliquot_m2_mod4(int sigma_m2_mod4) { return {kAliquotM2[class_index_mod4(sigma_m2_mod4)], 4}; }

ResidueClass forced_sigma_m2_mod4(int p_mod8, int k_mod8) {
  return {class_index_mod8(p_mod8, "p") == class_index_mod8(k_mod8, "k") ? 1 : 3, 4};
}

std::uint64_t geometric_sum_mod(std::uint64_t p, std::uint64_t k, std::uint64_t modulus) {
  if (modulus == 1) return 0;
  // sum_{i<n} p^i for n = k + 1 terms, built from the top bit down:
  // doubling G(2n) = G(n)(1 + p^n), increment G(n+1) = G(n) p + 1.
  const std::uint64_t terms = k + 1;
  const std::uint64_t base = p % modulus;
  std::uint64_t sum = 0, power = 1 % modulus;
  for (int bit = 63; bit >= 0; --bit) {
    sum = mulmod(sum, (1 + power) % modulus, modulus);
    power = mulmod(power, power, modulus);
    if ((terms >> bit) & 1) {
      sum = (mulmod(sum, base, modulus) + 1) % modulus;
      power = mulmod(power, base, modulus);
    }
  }
  return sum;
}

OracleReport lemma_oracle(std::uint64_t prime_bound, const std::vector<std::uint64_t>& k_values, unsigned threads) {
  if (prime_bound < 5) throw std::invalid_argument("prime bound must be at least 5");
  if (prime_bound >= 0xffffffffULL) throw std::invalid_argument("prime bound must be below 2^32 - 1");
  if (k_values.empty()) throw std::invalid_argument("k list is empty");
  for (std::uint64_t k : k_values) {
    if (k % 4 != 1) throw std::invalid_argument("every k must be 1 mod 4, got " + std::to_string(k));
  }

  std::vector<std::uint32_t> primes;
  for (std::uint32_t p : primes_below(static_cast<std::uint32_t>(prime_bound + 1))) {
    if (p % 4 == 1) primes.push_back(p);
  }

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, primes.size()))));
  std::vector<OraclePartial> partials(threads);
  const std::size_t chunk = (primes.size() + threads - 1) / threads;
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t lo = std::min(primes.size(), t * chunk);
      const std::size_t hi = std::min(primes.size(), lo + chunk);
      std::span<const std::uint32_t> slice(primes.data() + lo, hi - lo);
      if (threads == 1) {
        sweep(slice, k_values, partials[t]);
      } else {
        workers.emplace_back([slice, &k_values, &partial = partials[t]] { sweep(slice, k_values, partial); });
      }
    }
  }

  OracleReport report;
  report.prime_bound = prime_bound;
  report.k_values = k_values;
  for (auto& part : partials) {
    report.primes_tested += part.primes_tested;
    report.checks += part.checks;
    report.mismatches.insert(report.mismatches.end(), part.mismatches.begin(), part.mismatches.end());
    for (const auto& [key, by_triple] : part.residues) {
      for (const auto& [triple, count] : by_triple) report.residues_mod16[key][triple] += count;
    }
  }
  return report;
}

const std::array<TheoremCase, 4>& theorem_cases() {
  static const std::array<TheoremCase, 4> cases{{{1, 1, 1, 3}, {2, 1, 5, 1}, {3, 5, 1, 1}, {4, 5, 5, 3}}};
  return cases;
}

const TheoremCase& theorem_case(int case_id) {
  if (case_id < 1 || case_id > 4) throw std::invalid_argument("case id must be 1..4, got " + std::to_string(case_id));
  return theorem_cases()[case_id - 1];
}

std::string to_string(const SymbolicProduct& side, std::string_view variables) {
  std::string out = side.constant == 1 ? "" : std::to_string(side.constant);
  for (std::size_t i = 0; i < side.forms.size(); ++i) {
    const auto& f = side.forms[i];
    const char var = i < variables.size() ? variables[i] : '?';
    out += "(" + std::to_string(f.coefficient) + var;
    if (f.offset != 0) out += " + " + std::to_string(f.offset);
    out += ")";
  }
  return out;
}

CaseEquation case_equation(const TheoremCase& c) {
  // 2 D(m^2) s(m^2) on the left, g^2 D(p^k) s(p^k) on the right.
  switch (c.case_id) {
    case 1:  // 2(4a + 3)(4b + 2) = (8x + 1)(8c)(8d + 1)
      return {{2, {{4, 3}, {4, 2}}}, {1, {{8, 1}, {8, 0}, {8, 1}}}};
    case 2:  // 2(4a + 1)(4b) = (8x + 1)(8c + 4)(8d + 5)
      return {{2, {{4, 1}, {4, 0}}}, {1, {{8, 1}, {8, 4}, {8, 5}}}};
    case 3:  // 2(4a + 1)(4b) = (8x + 1)(8c + 4)(8d + 1)
      return {{2, {{4, 1}, {4, 0}}}, {1, {{8, 1}, {8, 4}, {8, 1}}}};
    case 4:  // 2(4a + 3)(4b + 2) = (8x + 1)(8c)(8d + 5)
      return {{2, {{4, 3}, {4, 2}}}, {1, {{8, 1}, {8, 0}, {8, 5}}}};
    default:
      throw std::invalid_argument("case id must be 1..4, got " + std::to_string(c.case_id));
  }
}

CaseEquation derive_equation(const TheoremCase& c) {
  const int sm = c.assumed_sigma_m2_mod4;
  SymbolicProduct lhs{2, {{4, deficiency_m2_mod4(sm).value()}, {4, aliquot_m2_mod4(sm).value()}}};
  // An odd square is 1 mod 8.
  SymbolicProduct rhs{1,
                      {{8, 1},
                       {8, deficiency_pk_mod8(c.p_mod8, c.k_mod8).value()},
                       {8, aliquot_pk_mod8(c.p_mod8, c.k_mod8).value()}}};
  return {std::move(lhs), std::move(rhs)};
}

std::set<std::int64_t> attained_residues(const SymbolicProduct& side, std::int64_t modulus) {
  if (modulus <= 0) throw std::invalid_argument("modulus must be positive");
  // Variables are independent, so the attained set is the product of the
  // per-form residue sets.
  std::set<std::int64_t> acc{((side.constant % modulus) + modulus) % modulus};
  for (const auto& form : side.forms) {
    const auto factor = form_residues(form, modulus);
    std::set<std::int64_t> next;
    for (std::int64_t a : acc) {
      for (std::int64_t b : factor) next.insert(a * b % modulus);
    }
    acc = std::move(next);
  }
  return acc;
}

InfeasibilityCertificate certify_case(const TheoremCase& c, std::int64_t modulus) {
  if (modulus <= 0 || modulus % 8 != 0) {
    throw std::invalid_argument("enumeration modulus must be a positive multiple of 8, got " + std::to_string(modulus));
  }
  if (modulus > kMaxCertifyModulus) {
    throw std::invalid_argument("enumeration modulus above " + std::to_string(kMaxCertifyModulus));
  }
  InfeasibilityCertificate cert;
  cert.case_id = c.case_id;
  cert.modulus = modulus;
  cert.equation = case_equation(c);
  cert.lhs_residues = attained_residues(cert.equation.lhs, modulus);
  cert.rhs_residues = attained_residues(cert.equation.rhs, modulus);
  cert.disjoint = std::none_of(cert.lhs_residues.begin(), cert.lhs_residues.end(),
                               [&](std::int64_t r) { return cert.rhs_residues.contains(r); });
  return cert;
}

}  // namespace opn
