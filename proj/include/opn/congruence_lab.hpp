#pragma once

// Residue-class content of the main theorem on odd perfect numbers
// n = p^k m^2 with p = k = 1 (mod 4):
//   * closed-form residue maps for sigma(p^k), D(p^k), s(p^k) mod 8 and
//     D(m^2), s(m^2) mod 4,
//   * a brute-force oracle sweep that confirms the mod-8 maps,
//   * finite-enumeration certificates for the four impossible cases.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace opn {

/// value in [0, modulus).
class ResidueClass {
 public:
  /// Reduces `value` into range; throws std::invalid_argument for modulus <= 0.
  ResidueClass(std::int64_t value, std::int64_t modulus);

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return modulus_; }

  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;

 private:
  std::int64_t value_;
  std::int64_t modulus_;
};

std::string to_string(const ResidueClass& r);

// Residue maps. Inputs must be 1 or 5 (mod 8 classes compatible with
// p = k = 1 mod 4), or 1 or 3 for the sigma(m^2) mod 4 arguments;
// anything else throws std::invalid_argument.
ResidueClass sigma_pk_mod8(int p_mod8, int k_mod8);
ResidueClass deficiency_pk_mod8(int p_mod8, int k_mod8);
ResidueClass aliquot_pk_mod8(int p_mod8, int k_mod8);
ResidueClass deficiency_m2_mod4(int sigma_m2_mod4);
ResidueClass aliquot_m2_mod4(int sigma_m2_mod4);

/// 1 when p = k (mod 8), else 3: the only sigma(m^2) class left open.
ResidueClass forced_sigma_m2_mod4(int p_mod8, int k_mod8);

/// sum_{i=0}^{k} p^i mod `modulus`, in O(log k) without forming p^k.
std::uint64_t geometric_sum_mod(std::uint64_t p, std::uint64_t k, std::uint64_t modulus);

struct OracleMismatch {
  std::uint64_t p = 0;
  std::uint64_t k = 0;
  std::string quantity;  // "sigma", "deficiency" or "aliquot"
  int expected = 0;      // from the residue map
  int observed = 0;      // from modular arithmetic
};

/// Observed (sigma, D, s) residues mod 16, keyed by (p mod 16, k mod 16).
/// Raw data for pushing the analysis from mod 4 toward mod 8.
using ResidueTriple = std::tuple<int, int, int>;
using ResidueTable = std::map<std::pair<int, int>, std::map<ResidueTriple, std::uint64_t>>;

struct OracleReport {
  std::uint64_t prime_bound = 0;
  std::vector<std::uint64_t> k_values;
  std::uint64_t primes_tested = 0;
  /// One check per (p, k) pair; each compares all three maps.
  std::uint64_t checks = 0;
  std::vector<OracleMismatch> mismatches;
  ResidueTable residues_mod16;
};

/// Every prime p <= prime_bound with p = 1 (mod 4), crossed with every k.
/// Requires prime_bound >= 5 and every k = 1 (mod 4); throws
/// std::invalid_argument otherwise. The prime range is split across
/// `threads` workers.
OracleReport lemma_oracle(std::uint64_t prime_bound, const std::vector<std::uint64_t>& k_values,
                          unsigned threads = 1);

struct TheoremCase {
  int case_id = 0;
  int p_mod8 = 0;
  int k_mod8 = 0;
  int assumed_sigma_m2_mod4 = 0;

  friend bool operator==(const TheoremCase&, const TheoremCase&) = default;
};

/// The four impossible cases, in order: (1,1,1,3) (2,1,5,1) (3,5,1,1) (4,5,5,3).
const std::array<TheoremCase, 4>& theorem_cases();

/// Throws std::invalid_argument outside 1..4.
const TheoremCase& theorem_case(int case_id);

/// coefficient * x + offset for a free integer variable x.
struct LinearForm {
  std::int64_t coefficient = 0;
  std::int64_t offset = 0;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// constant * product of linear forms in independent variables.
struct SymbolicProduct {
  std::int64_t constant = 1;
  std::vector<LinearForm> forms;

  friend bool operator==(const SymbolicProduct&, const SymbolicProduct&) = default;
};

/// Renders e.g. "2(4a + 3)(4b + 2)"; `variables` names the forms in order.
std::string to_string(const SymbolicProduct& side, std::string_view variables);

/// 2 D(m^2) s(m^2) = g^2 D(p^k) s(p^k) under the case assumptions, with
/// g^2 taken as 8x + 1.
struct CaseEquation {
  SymbolicProduct lhs;
  SymbolicProduct rhs;

  friend bool operator==(const CaseEquation&, const CaseEquation&) = default;
};

/// The equation as stated for each case, with literal residue offsets.
CaseEquation case_equation(const TheoremCase& c);

/// The same equation assembled from the residue maps above.
CaseEquation derive_equation(const TheoremCase& c);

/// All residues mod `modulus` attained as the variables range over Z.
std::set<std::int64_t> attained_residues(const SymbolicProduct& side, std::int64_t modulus);

struct InfeasibilityCertificate {
  int case_id = 0;
  std::int64_t modulus = 0;
  CaseEquation equation;
  std::set<std::int64_t> lhs_residues;
  std::set<std::int64_t> rhs_residues;
  bool disjoint = false;
};

/// Enumerates both sides of the case equation modulo `modulus`, which must
/// be a positive multiple of 8 (std::invalid_argument otherwise).
InfeasibilityCertificate certify_case(const TheoremCase& c, std::int64_t modulus = 16);

}  // namespace opn
