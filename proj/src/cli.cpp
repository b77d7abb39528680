#include "opn/cli.hpp"

#include "opn/arith.hpp"
#include "opn/congruence_lab.hpp"
#include "opn/identity_chain.hpp"
#include "opn/special_prime_sieve.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <sstream>

namespace opn::cli {

using nlohmann::json;

namespace {

struct Options {
  bool json = false;
  bool quiet = false;
  unsigned threads = 1;
};

// A suite's structured payload plus its human-readable rendering.
struct SuiteOutput {
  json payload;
  std::string text;
};

json suite_header(const std::string& name) {
  return json{{"suite", name}, {"checks", 0}, {"failures", json::array()}};
}

void record(json& payload, bool ok, json failure) {
  payload["checks"] = payload["checks"].get<std::uint64_t>() + 1;
  if (!ok) payload["failures"].push_back(std::move(failure));
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::uint64_t parse_u64(std::string_view text, const char* what) {
  auto v = to_u64(parse_natural(text));
  if (!v) throw std::invalid_argument(std::string(what) + " does not fit in 64 bits: " + std::string(text));
  return *v;
}

/// `3^2,7^2,11^2,13^2,22021^1!`: base^exp terms, `!` marks a pseudo-prime.
SpoofFactorization parse_factor_spec(const std::string& spec) {
  std::vector<SpoofFactor> factors;
  for (std::string term : split(spec, ',')) {
    SpoofFactor f;
    if (!term.empty() && term.back() == '!') {
      f.pseudo_prime = true;
      term.pop_back();
    }
    const auto caret = term.find('^');
    if (caret == std::string::npos) throw std::invalid_argument("factor term '" + term + "' is not base^exp");
    f.base = parse_natural(term.substr(0, caret));
    const auto exponent = parse_u64(term.substr(caret + 1), "exponent");
    if (exponent > 1000000) throw std::invalid_argument("exponent too large: " + std::to_string(exponent));
    f.exponent = static_cast<unsigned long>(exponent);
    factors.push_back(std::move(f));
  }
  return SpoofFactorization(std::move(factors));
}

EulerTriple parse_triple(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw std::invalid_argument("triple must be p,k,m, got '" + text + "'");
  const auto k = parse_u64(parts[1], "k");
  if (k > 1000000) throw std::invalid_argument("k too large: " + parts[1]);
  return {parse_natural(parts[0]), static_cast<unsigned long>(k), parse_natural(parts[2])};
}

std::string classify(const Integer& deficiency) {
  if (sgn(deficiency) > 0) return "deficient";
  if (sgn(deficiency) < 0) return "abundant";
  return "perfect";
}

SuiteOutput run_sigma(const std::string& n_text) {
  const Natural n = parse_natural(n_text);
  if (sgn(n) == 0) throw std::invalid_argument("n must be at least 1");
  const Factorization f = factorize(n);
  const Natural s = sigma(f);
  const Integer d = 2 * n - s;
  const Natural a = s - n;

  json payload = suite_header("sigma");
  json factors = json::array();
  std::string factor_text;
  for (const auto& [p, e] : f) {
    const bool proven = primality(p) == Primality::prime;
    factors.push_back({{"prime", p.get_str()}, {"exponent", e}, {"proven_prime", proven}});
    if (!factor_text.empty()) factor_text += " * ";
    factor_text += p.get_str() + (e > 1 ? "^" + std::to_string(e) : "") + (proven ? "" : "(probable)");
  }
  payload["n"] = n.get_str();
  payload["factorization"] = factors;
  payload["sigma"] = s.get_str();
  payload["deficiency"] = d.get_str();
  payload["aliquot"] = a.get_str();
  payload["classification"] = classify(d);
  record(payload, d + a == n, "D(n) + s(n) != n");

  std::string text = "n = " + n.get_str() + " = " + (factor_text.empty() ? "1" : factor_text) + "\n";
  text += "σ=" + s.get_str() + " D=" + d.get_str() + " s=" + a.get_str() + " (" + classify(d) + ")\n";
  return {std::move(payload), std::move(text)};
}

SuiteOutput run_verify_identities(const std::string& spoof_spec, const std::string& triple_text,
                                  const std::string& mode_text) {
  if (spoof_spec.empty() == triple_text.empty()) {
    throw std::invalid_argument("give exactly one of --spoof or --triple");
  }
  EulerTriple triple;
  DecompositionSigmas sigmas;
  SigmaMode mode = SigmaMode::true_sigma;
  if (!spoof_spec.empty()) {
    auto split = split_spoof(parse_factor_spec(spoof_spec));
    triple = split.triple;
    sigmas = split.sigmas;
    mode = SigmaMode::spoof;
  } else {
    if (mode_text == "spoof") {
      mode = SigmaMode::spoof;
    } else if (mode_text != "true") {
      throw std::invalid_argument("--mode must be 'true' or 'spoof'");
    }
    triple = parse_triple(triple_text);
    sigmas = evaluate_sigmas(triple, mode);
  }
  const IdentityReport r = compute_identity_report(sigmas);
  const FormCheck form = validate_euler_form(triple, mode);

  json payload = suite_header("verify-identities");
  payload["mode"] = mode == SigmaMode::spoof ? "spoof" : "true-sigma";
  payload["p"] = triple.p.get_str();
  payload["k"] = triple.k;
  payload["m"] = triple.m.get_str();
  payload["n"] = triple.n().get_str();
  payload["sigma_p_power"] = sigmas.sigma_p_power.get_str();
  payload["sigma_m_square"] = sigmas.sigma_m_square.get_str();
  payload["euler_form"] = {{"valid", form.ok}, {"reasons", form.reasons}};
  payload["g"] = r.g.get_str();
  payload["g_squared"] = Natural(r.g * r.g).get_str();
  payload["q1"] = to_string(r.q1);
  payload["q2"] = to_string(r.q2);
  payload["q3"] = to_string(r.q3);
  payload["q4"] = to_string(r.q4);
  payload["q5"] = to_string(r.q5);
  payload["ratio"] = r.ratio ? json(to_string(*r.ratio)) : json(nullptr);
  payload["star_lhs"] = to_string(r.star_lhs);
  payload["perfect"] = r.perfect;
  payload["all_identities_hold"] = r.all_identities_hold;

  record(payload, form.ok, "Euler form: " + (form.reasons.empty() ? std::string() : form.reasons.front()));
  record(payload, r.perfect, "sigma(p^k) sigma(m^2) != 2 p^k m^2");
  record(payload, r.q1 == r.q2, "sigma(m^2)/p^k != 2m^2/sigma(p^k)");
  record(payload, r.q2 == r.q3, "2m^2/sigma(p^k) != D(m^2)/s(p^k)");
  record(payload, r.q3 == r.q4, "D(m^2)/s(p^k) != s(m^2)/(D(p^k)/2)");
  record(payload, r.q4 == r.q5, "s(m^2)/(D(p^k)/2) != gcd(m^2, sigma(m^2))");
  record(payload, r.ratio && *r.ratio == 2, "D(p^k)D(m^2)/(s(p^k)s(m^2)) != 2");
  record(payload, r.star_lhs == Rational(r.g * r.g), "2D(m^2)s(m^2)/(D(p^k)s(p^k)) != g^2");
  if (mod_ui(r.g, 2) == 1) record(payload, mod_ui(r.g * r.g, 8) == 1, "g^2 is not 1 mod 8");

  std::ostringstream text;
  text << "p^k m^2 with p=" << triple.p << " k=" << triple.k << " m=" << triple.m << " ("
       << payload["mode"].get<std::string>() << ")\n"
       << "  sigma(p^k)=" << sigmas.sigma_p_power << " sigma(m^2)=" << sigmas.sigma_m_square
       << (r.perfect ? "  perfect" : "  NOT perfect") << "\n"
       << "  sigma(m^2)/p^k        = " << r.q1 << "\n"
       << "  2m^2/sigma(p^k)       = " << r.q2 << "\n"
       << "  D(m^2)/s(p^k)         = " << r.q3 << "\n"
       << "  s(m^2)/(D(p^k)/2)     = " << r.q4 << "\n"
       << "  gcd(m^2, sigma(m^2))  = " << r.g << "\n"
       << "  ratio                 = " << (r.ratio ? to_string(*r.ratio) : std::string("undefined")) << "\n"
       << "  2D(m^2)s(m^2)/(D(p^k)s(p^k)) = " << r.star_lhs << "  g^2 = " << Natural(r.g * r.g) << "\n"
       << "  all identities hold: " << (r.all_identities_hold ? "yes" : "no") << "\n";
  for (const auto& reason : form.reasons) text << "  euler form: " << reason << "\n";
  return {std::move(payload), text.str()};
}

SuiteOutput run_verify_lemmas(const std::string& bound_text, const std::string& k_text, unsigned threads) {
  const std::uint64_t bound = parse_u64(bound_text, "prime bound");
  const auto ks = parse_progression_list(k_text);
  const OracleReport report = lemma_oracle(bound, ks, threads);

  json payload = suite_header("verify-lemmas");
  payload["checks"] = report.checks;
  for (const auto& mm : report.mismatches) {
    payload["failures"].push_back(
        {{"p", mm.p}, {"k", mm.k}, {"quantity", mm.quantity}, {"expected", mm.expected}, {"observed", mm.observed}});
  }
  payload["prime_bound"] = report.prime_bound;
  payload["k_values"] = report.k_values;
  payload["primes_tested"] = report.primes_tested;

  json maps = json::array();
  std::ostringstream text;
  text << "p mod 8  k mod 8  sigma(p^k)  D(p^k)  s(p^k)  (mod 8)\n";
  for (int pm : {1, 5}) {
    for (int km : {1, 5}) {
      const auto s = sigma_pk_mod8(pm, km).value(), d = deficiency_pk_mod8(pm, km).value(),
                 a = aliquot_pk_mod8(pm, km).value();
      maps.push_back({{"p_mod8", pm}, {"k_mod8", km}, {"sigma", s}, {"deficiency", d}, {"aliquot", a}});
      text << "      " << pm << "        " << km << "           " << s << "       " << d << "       " << a << "\n";
    }
  }
  payload["maps"] = maps;

  json residues = json::array();
  for (const auto& [key, by_triple] : report.residues_mod16) {
    for (const auto& [triple, count] : by_triple) {
      residues.push_back({{"p_mod16", key.first},
                          {"k_mod16", key.second},
                          {"sigma", std::get<0>(triple)},
                          {"deficiency", std::get<1>(triple)},
                          {"aliquot", std::get<2>(triple)},
                          {"count", count}});
    }
  }
  payload["residues_mod16"] = residues;

  text << "primes p <= " << bound << " with p = 1 mod 4: " << report.primes_tested << ", k values: " << ks.size()
       << "\nchecks: " << report.checks << ", mismatches: " << report.mismatches.size() << "\n";
  for (const auto& mm : report.mismatches) {
    text << "  MISMATCH p=" << mm.p << " k=" << mm.k << " " << mm.quantity << ": map " << mm.expected << ", observed "
         << mm.observed << "\n";
  }
  return {std::move(payload), text.str()};
}

SuiteOutput run_certify_theorem(std::int64_t modulus) {
  json payload = suite_header("certify-theorem");
  payload["modulus"] = modulus;
  json certs = json::array();
  std::ostringstream text;
  auto set_text = [](const std::set<std::int64_t>& s) {
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it) out += (it == s.begin() ? "" : ",") + std::to_string(*it);
    return out + "}";
  };
  for (const auto& c : theorem_cases()) {
    const auto cert = certify_case(c, modulus);
    const bool derived = derive_equation(c) == cert.equation;
    const std::string eq = to_string(cert.equation.lhs, "ab") + " = " + to_string(cert.equation.rhs, "xcd");
    certs.push_back({{"case_id", c.case_id},
                     {"p_mod8", c.p_mod8},
                     {"k_mod8", c.k_mod8},
                     {"assumed_sigma_m2_mod4", c.assumed_sigma_m2_mod4},
                     {"equation", eq},
                     {"derived_from_maps", derived},
                     {"lhs_residues", cert.lhs_residues},
                     {"rhs_residues", cert.rhs_residues},
                     {"disjoint", cert.disjoint}});
    record(payload, derived, "case " + std::to_string(c.case_id) + ": equation does not follow from the residue maps");
    record(payload, cert.disjoint, "case " + std::to_string(c.case_id) + ": residue sets overlap mod " +
                                       std::to_string(modulus));
    text << "case " << c.case_id << ": p=" << c.p_mod8 << " k=" << c.k_mod8 << " (mod 8), sigma(m^2)="
         << c.assumed_sigma_m2_mod4 << " (mod 4)\n  " << eq << "\n  lhs " << set_text(cert.lhs_residues) << " rhs "
         << set_text(cert.rhs_residues) << " (mod " << modulus << ") " << (cert.disjoint ? "disjoint" : "OVERLAP")
         << "\n";
  }
  payload["certificates"] = certs;
  return {std::move(payload), text.str()};
}

SuiteOutput run_sieve(const std::string& bound_text, unsigned threads) {
  const std::uint64_t bound = parse_u64(bound_text, "bound");
  const auto hits = sieve_special_primes(bound, threads);
  json payload = suite_header("sieve");
  payload["bound"] = bound;
  json list = json::array();
  std::string text;
  for (const auto& h : hits) {
    list.push_back({{"p", h.p}, {"root", h.root}, {"p_mod16", h.p_mod16}});
    const bool ok = h.p == 2 * h.root * h.root - 1 && h.root % 2 == 1 && is_prime_u64(h.p) && mod16_filter(h.p);
    record(payload, ok, "hit " + std::to_string(h.p) + " violates the hit invariants");
    text += std::to_string(h.p) + " " + std::to_string(h.root) + " " + std::to_string(h.p_mod16) + "\n";
  }
  payload["hits"] = list;
  return {std::move(payload), std::move(text)};
}

SuiteOutput run_forced_class(int p_mod8, int k_mod8) {
  const auto forced = forced_sigma_m2_mod4(p_mod8, k_mod8);
  json payload = suite_header("forced-class");
  payload["p_mod8"] = p_mod8;
  payload["k_mod8"] = k_mod8;
  payload["sigma_m2_mod4"] = forced.value();
  payload["excluded_sigma_m2_mod4"] = forced.value() == 1 ? 3 : 1;
  record(payload, (forced.value() == 1) == (p_mod8 == k_mod8), "forced class disagrees with p = k (mod 8)");
  std::string text = "p=" + std::to_string(p_mod8) + " k=" + std::to_string(k_mod8) + " (mod 8): sigma(m^2) = " +
                     std::to_string(forced.value()) + " (mod 4)\n";
  return {std::move(payload), std::move(text)};
}

}  // namespace

std::vector<std::uint64_t> parse_progression_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  bool pending_ellipsis = false;
  std::uint64_t step = 0;
  for (const auto& token : split(text, ',')) {
    if (token == "...") {
      if (pending_ellipsis || out.size() < 2) throw std::invalid_argument("'...' needs two preceding terms");
      const std::uint64_t a = out[out.size() - 2], b = out.back();
      if (b <= a) throw std::invalid_argument("'...' needs an increasing progression");
      step = b - a;
      pending_ellipsis = true;
      continue;
    }
    const std::uint64_t v = parse_u64(token, "list term");
    if (pending_ellipsis) {
      const std::uint64_t last = out.back();
      if (v <= last || (v - last) % step != 0) {
        throw std::invalid_argument("term " + token + " does not continue the progression");
      }
      for (std::uint64_t x = last + step; x < v; x += step) out.push_back(x);
      pending_ellipsis = false;
    }
    out.push_back(v);
  }
  if (pending_ellipsis) throw std::invalid_argument("'...' needs a final term");
  return out;
}

CommandResult run(const std::vector<std::string>& args) {
  CommandResult result;
  Options opts;

  CLI::App app{"Exact verification suites for odd perfect number congruences", "opn-verify"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", opts.json, "Emit the JSON report");
  app.add_flag("--quiet", opts.quiet, "Print nothing; report through the exit code only");
  app.add_option("--threads", opts.threads, "Worker threads for long sweeps")->check(CLI::Range(1u, 1024u));

  std::string n_text;
  auto* sigma_cmd = app.add_subcommand("sigma", "Print sigma(N), D(N) and s(N)");
  sigma_cmd->add_option("N", n_text, "Positive decimal integer")->required();

  std::string spoof_spec, triple_text, mode_text = "true";
  auto* ident_cmd = app.add_subcommand("verify-identities", "Check the identity chain on a decomposition p^k m^2");
  auto* spoof_opt =
      ident_cmd->add_option("--spoof", spoof_spec, "Factor spec, e.g. 3^2,7^2,11^2,13^2,22021^1! (! = pseudo-prime)");
  auto* triple_opt = ident_cmd->add_option("--triple", triple_text, "p,k,m");
  spoof_opt->excludes(triple_opt);
  ident_cmd->add_option("--mode", mode_text, "Sigma evaluation for --triple: true or spoof")->needs(triple_opt);

  std::string bound_text, k_text;
  auto* lemma_cmd = app.add_subcommand("verify-lemmas", "Sweep the mod-8 residue maps against modular arithmetic");
  lemma_cmd->add_option("--prime-bound", bound_text, "Largest prime tested")->required();
  lemma_cmd->add_option("--k-list", k_text, "Exponents, e.g. 1,5,9,...,97")->required();

  std::int64_t modulus = 16;
  auto* cert_cmd = app.add_subcommand("certify-theorem", "Certify the four impossible cases by enumeration");
  cert_cmd->add_option("--modulus", modulus, "Enumeration modulus (multiple of 8)");

  std::string sieve_bound;
  auto* sieve_cmd = app.add_subcommand("sieve", "Special primes p < bound with (p+1)/2 an odd square");
  sieve_cmd->add_option("--bound", sieve_bound, "Exclusive upper bound")->required();

  int p_mod8 = 0, k_mod8 = 0;
  auto* forced_cmd = app.add_subcommand("forced-class", "sigma(m^2) mod 4 forced by p, k mod 8");
  forced_cmd->add_option("--p-mod8", p_mod8)->required();
  forced_cmd->add_option("--k-mod8", k_mod8)->required();

  std::ostringstream out, err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.exit_code = code == 0 ? kPass : kUsageError;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  try {
    SuiteOutput suite;
    if (sigma_cmd->parsed()) {
      suite = run_sigma(n_text);
    } else if (ident_cmd->parsed()) {
      suite = run_verify_identities(spoof_spec, triple_text, mode_text);
    } else if (lemma_cmd->parsed()) {
      suite = run_verify_lemmas(bound_text, k_text, opts.threads);
    } else if (cert_cmd->parsed()) {
      suite = run_certify_theorem(modulus);
    } else if (sieve_cmd->parsed()) {
      suite = run_sieve(sieve_bound, opts.threads);
    } else {
      suite = run_forced_class(p_mod8, k_mod8);
    }
    result.exit_code = suite.payload["failures"].empty() ? kPass : kVerificationFailure;
    result.payload = std::move(suite.payload);
    if (!opts.quiet) result.out = opts.json ? result.payload.dump(2) + "\n" : suite.text;
  } catch (const FactorizationEffortExceeded& e) {
    result.exit_code = kUsageError;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::invalid_argument& e) {
    result.exit_code = kUsageError;
    result.err = std::string("error: ") + e.what() + "\nRun with --help for more information.\n";
  }
  return result;
}

}  // namespace opn::cli
