#pragma once
// Theorem checks over (G, A, p) and the scenario suite behind the CLI.

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "bb/actions.hpp"
#include "json.hpp"

namespace bb {

struct ConfigParse : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotCentralP : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  double budget_seconds = 0;      // IBr search budget; 0: unlimited
  bool skip_ibr = false;
  std::uint64_t ibr_max_order = 2000;
  std::size_t pairing_samples = 40;  // per (G, N, θ) in the dade check
};

enum class Verdict { pass, fail, skipped };
std::string to_string(Verdict v);

struct CheckResult {
  std::string check;
  std::uint32_t prime = 0;  // 0 when the check is not prime-specific
  Verdict verdict = Verdict::pass;
  nlohmann::json details;   // witnesses on failure, notes on skips
};

/// For every block B at p: B A-invariant ⇔ Irr(B) has an A-invariant
/// member ⇔ IBr(B) has one (the last only where IBr completes).
CheckResult verify_main_theorem(const ActionSpec& spec, std::uint32_t p, const VerifyOptions& opts = {});

/// For Z an A-invariant central p-subgroup and ν ∈ Irr_A(Z) (an index into
/// Irr(Z)): every A-invariant block B has an A-invariant χ ∈ Irr(B|ν).
/// Throws NotCentralP.
CheckResult verify_thmA_nu(const ActionSpec& spec, const PermGroup& Z, std::size_t nu, std::uint32_t p,
                           const VerifyOptions& opts = {});
/// verify_thmA_nu for Z the Sylow p-subgroup of Z(G) and every ν ∈ Irr_A(Z).
std::vector<CheckResult> thmA_nu_checks(const ActionSpec& spec, std::uint32_t p, const VerifyOptions& opts = {});

/// υ is well defined and onto for every N ⊴ G and θ̃ ∈ Irr(G) with θ̃_N
/// irreducible, and bijective whenever a regime applies.
CheckResult gallagher_check(const PermGroup& G, std::uint32_t p, const VerifyOptions& opts = {});
/// Pairing well-definedness and bimultiplicativity on sampled triples,
/// choice independence of G[b], unique covering, and G[b]/Z = (G/Z)[b̄]
/// over every N ⊴ G and G-invariant b ∈ Bl(N).
CheckResult dade_check(const PermGroup& G, std::uint32_t p, const VerifyOptions& opts = {});
/// σ_G over every A-stable N ⊴ G and θ ∈ Irr(N) invariant under G and A:
/// cocycle identity, bijectivity, degree ratios, equivariance, and block
/// fibers at every p | |G| where G[b] = G.
CheckResult triples_check(const ActionSpec& spec, const VerifyOptions& opts = {});
/// IBr, decomposition matrix and block coherence at p.
CheckResult brauer_check(const ActionSpec& spec, std::uint32_t p, const VerifyOptions& opts = {});

struct ScenarioSpec {
  std::string name;
  std::filesystem::path group;
  std::filesystem::path automorphisms;  // empty: trivial action
  std::vector<std::uint32_t> primes;    // empty: every p | |G|
  std::vector<std::string> checks;      // main-theorem, thmA-nu, gallagher, dade, triples, brauer
  bool skip_ibr = false;
};

struct ScenarioReport {
  std::string name;
  std::uint64_t group_order = 0;
  std::uint64_t acting_order = 0;
  std::vector<CheckResult> checks;
  std::string error;  // set when the scenario could not be loaded
  bool passed() const;
};

ScenarioReport run_scenario(const ScenarioSpec& s, const VerifyOptions& opts = {});

struct SuiteReport {
  std::vector<ScenarioReport> scenarios;  // sorted by name
  bool passed() const;
};

/// {"scenarios": [{"name", "group", "automorphisms"?, "primes"?, "checks"?,
/// "skip_ibr"?}]}; paths are relative to `base`.  Throws ConfigParse.
std::vector<ScenarioSpec> parse_suite_config(const nlohmann::json& config, const std::filesystem::path& base);
SuiteReport run_suite(const std::vector<ScenarioSpec>& scenarios, const VerifyOptions& opts = {});

nlohmann::json to_json(const CheckResult& c);
nlohmann::json to_json(const ScenarioReport& r);
nlohmann::json to_json(const SuiteReport& r);

}  // namespace bb
