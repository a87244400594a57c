#include "bb/verify.hpp"

#include <algorithm>
#include <random>

#include "bb/brauer.hpp"
#include "bb/classes.hpp"
#include "bb/dade.hpp"
#include "bb/gallagher.hpp"
#include "bb/io.hpp"
#include "bb/triples.hpp"

namespace bb {

namespace {

using nlohmann::json;

IbrOptions ibr_options(const VerifyOptions& o) {
  IbrOptions io;
  io.seed = o.seed;
  io.budget_seconds = o.budget_seconds;
  io.max_group_order = o.ibr_max_order;
  return io;
}

template <class T>
std::vector<T> sorted_intersection(std::vector<T> a, std::vector<T> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<T> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool block_invariant(const PermGroup& G, const PermGroup& N, std::size_t b, std::uint32_t p) {
  for (const Perm& g : G.generators())
    if (conjugate_block(N, b, g, p) != b) return false;
  return true;
}

bool a_stable(const ActionSpec& spec, const PermGroup& N) {
  for (const Perm& a : spec.acting_group().generators())
    if (!spec.apply(a, N).same_group(N)) return false;
  return true;
}

void fail(CheckResult& r, json witness) {
  r.verdict = Verdict::fail;
  r.details["failures"].push_back(std::move(witness));
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::skipped: return "SKIPPED";
  }
  return "?";
}

CheckResult verify_main_theorem(const ActionSpec& spec, std::uint32_t p, const VerifyOptions& opts) {
  if (!spec.coprime()) throw NotCoprime("verify_main_theorem: action is not coprime");
  const PermGroup& G = spec.group();
  CheckResult r{"main-theorem", p, Verdict::pass, json::object()};
  auto B = block_partition(G, p);
  auto inv_blocks = invariant_blocks(spec, p);
  auto inv_chars = invariant_characters(spec);

  std::optional<std::vector<std::size_t>> inv_brauer;
  std::shared_ptr<const IbrSet> I;
  const auto io = ibr_options(opts);
  if (opts.skip_ibr) {
    r.details["ibr"] = "skipped by request";
  } else {
    try {
      I = ibr(G, p, io);
      inv_brauer = invariant_brauer(spec, p, io);
      auto count = brauer_count_report(spec, p, io);
      r.details["ibr"] = {{"count", I->size()},
                          {"invariant", count.invariant_brauer},
                          {"fixed_regular_classes", count.fixed_regular_classes}};
    } catch (const IbrOutOfScope& e) {
      r.details["ibr"] = std::string("skipped: ") + e.what();
    } catch (const SearchIncomplete& e) {
      r.details["ibr"] = std::string("skipped: ") + e.what();
    }
  }

  json blocks = json::array();
  for (std::size_t b = 0; b < B->size(); ++b) {
    const bool i = std::find(inv_blocks.begin(), inv_blocks.end(), b) != inv_blocks.end();
    auto chars = sorted_intersection((*B)[b].members, inv_chars);
    json entry = {{"block", b}, {"members", (*B)[b].members}, {"invariant", i}, {"invariant_characters", chars}};
    bool ok = i == !chars.empty();
    if (inv_brauer) {
      auto phis = sorted_intersection(ibr_of_block(G, p, b, io), *inv_brauer);
      entry["invariant_brauer"] = phis;
      ok = ok && i == !phis.empty();
    }
    if (!ok) fail(r, entry);
    blocks.push_back(std::move(entry));
  }
  r.details["blocks"] = std::move(blocks);
  return r;
}

CheckResult verify_thmA_nu(const ActionSpec& spec, const PermGroup& Z, std::size_t nu, std::uint32_t p,
                           const VerifyOptions&) {
  const PermGroup& G = spec.group();
  if (!is_central(G, Z) || Z.order() != p_part(Z.order(), p) || !a_stable(spec, Z))
    throw NotCentralP("verify_thmA_nu: Z is not an A-invariant central p-subgroup");
  const auto& nu_chi = (*character_table(Z))[nu];
  for (std::size_t c = 0; c < Z.classes().count(); ++c)
    for (const Perm& a : spec.acting_group().generators())
      if (!(nu_chi.at(spec.apply(a, Z.classes().representative(c))) == nu_chi[c]))
        throw NotCentralP("verify_thmA_nu: ν is not A-invariant");

  CheckResult r{"thmA-nu", p, Verdict::pass, json::object()};
  r.details["Z"] = to_json(Z);
  r.details["nu"] = nu;
  auto B = block_partition(G, p);
  auto over = irr_over(G, Z, nu_chi);
  auto inv_chars = invariant_characters(spec);
  json blocks = json::array();
  for (auto b : invariant_blocks(spec, p)) {
    auto members = sorted_intersection((*B)[b].members, over);
    auto witnesses = sorted_intersection(members, inv_chars);
    json entry = {{"block", b}, {"irr_over_nu", members}, {"invariant", witnesses}};
    if (witnesses.empty()) fail(r, entry);
    blocks.push_back(std::move(entry));
  }
  r.details["blocks"] = std::move(blocks);
  return r;
}

std::vector<CheckResult> thmA_nu_checks(const ActionSpec& spec, std::uint32_t p, const VerifyOptions& opts) {
  const PermGroup& G = spec.group();
  PermGroup Z = sylow(center(G), p);
  std::vector<CheckResult> out;
  auto T = character_table(Z);
  for (std::size_t nu = 0; nu < T->size(); ++nu) {
    bool inv = true;
    for (std::size_t c = 0; c < Z.classes().count() && inv; ++c)
      for (const Perm& a : spec.acting_group().generators())
        inv = inv && (*T)[nu].at(spec.apply(a, Z.classes().representative(c))) == (*T)[nu][c];
    if (inv) out.push_back(verify_thmA_nu(spec, Z, nu, p, opts));
  }
  return out;
}

CheckResult gallagher_check(const PermGroup& G, std::uint32_t p, const VerifyOptions&) {
  CheckResult r{"gallagher", p, Verdict::pass, json::object()};
  auto T = character_table(G);
  std::size_t instances = 0, bijective = 0;
  for (const auto& N : normal_subgroups(G)) {
    if (N.order() == 1 || N.order() == G.order()) continue;
    auto q = quotient(G, N);
    for (std::size_t i = 0; i < T->size(); ++i) {
      auto res = restrict((*T)[i], N);
      if (!(inner_product(res, res) == Cyclotomic(1))) continue;
      auto rep = bijectivity_regimes((*T)[i], N, q, p);
      ++instances;
      bijective += rep.bijective;
      if (!rep.consistent()) fail(r, {{"N", to_json(N)}, {"theta_tilde", i}, {"report", to_json(rep)}});
    }
  }
  r.details["instances"] = instances;
  r.details["bijective"] = bijective;
  return r;
}

CheckResult dade_check(const PermGroup& G, std::uint32_t p, const VerifyOptions& opts) {
  CheckResult r{"dade", p, Verdict::pass, json::object()};
  std::mt19937_64 rng(opts.seed);
  const auto normals = normal_subgroups(G);
  const auto& E = G.elements();
  std::uniform_int_distribution<std::size_t> pick(0, E.size() - 1);
  std::size_t pairings = 0, blocks = 0, quotients = 0;
  for (const auto& N : normals) {
    // Pairing on G-invariant θ.
    auto TN = character_table(N);
    for (std::size_t t = 0; t < TN->size(); ++t) {
      bool inv = true;
      for (const Perm& g : G.generators()) inv = inv && conjugate((*TN)[t], g) == (*TN)[t];
      if (!inv) continue;
      PairingContext ctx(G, N, (*TN)[t]);
      for (std::size_t s = 0; s < opts.pairing_samples; ++s) {
        Perm x1 = E[pick(rng)], x2 = E[pick(rng)], y = E[pick(rng)];
        if (!N.contains(commutator(x1, y)) || !N.contains(commutator(x2, y))) continue;
        auto vals = ctx.pairing_all_extensions(x1, y);
        bool ok = std::all_of(vals.begin(), vals.end(), [&](const Cyclotomic& v) { return v == vals.front(); });
        ok = ok && ctx.pairing(x1 * x2, y) == ctx.pairing(x1, y) * ctx.pairing(x2, y);
        if (N.contains(commutator(x1, x2)))
          ok = ok && ctx.pairing(y, x1 * x2) == ctx.pairing(y, x1) * ctx.pairing(y, x2);
        ++pairings;
        if (!ok)
          fail(r, {{"pairing", {x1.to_cycles(), x2.to_cycles(), y.to_cycles()}}, {"N", to_json(N)}, {"theta", t}});
      }
    }
    auto BN = block_partition(N, p);
    for (std::size_t b = 0; b < BN->size(); ++b) {
      if (!block_invariant(G, N, b, p)) continue;
      ++blocks;
      json where = {{"N", to_json(N)}, {"b", b}};
      try {
        auto ram = ramification_group(G, N, b, p);
        bool ok = ram.subgroup.contains(N) && is_normal(G, ram.subgroup);
        for (const auto& w : ram.witnesses) ok = ok && w.result.same_group(ram.subgroup);
        if (!ok) fail(r, {{"ramification", to_json(ram)}, {"where", where}});
      } catch (const ChoiceDependence& e) {
        fail(r, {{"choice_dependence", e.what()}, {"where", where}});
        continue;
      }
      if (!unique_covering_check(G, N, b, p).holds()) fail(r, {{"unique_covering", false}, {"where", where}});
      for (const auto& Z : normals) {
        if (Z.order() == 1 || intersection(N, Z).order() != 1) continue;
        ++quotients;
        if (!quotient_compat_check(G, N, b, Z, p).holds())
          fail(r, {{"quotient_compatibility", false}, {"Z", to_json(Z)}, {"where", where}});
      }
    }
  }
  r.details["pairing_samples"] = pairings;
  r.details["invariant_blocks"] = blocks;
  r.details["quotient_checks"] = quotients;
  return r;
}

CheckResult triples_check(const ActionSpec& spec, const VerifyOptions& opts) {
  const PermGroup& G = spec.group();
  CheckResult r{"triples", 0, Verdict::pass, json::object()};
  TriplesOptions to;
  to.seed = opts.seed;
  std::size_t instances = 0, fibers_full = 0, fibers_partial = 0, partial_mismatches = 0;
  for (const auto& N : normal_subgroups(G)) {
    if (!a_stable(spec, N)) continue;
    auto TN = character_table(N);
    for (std::size_t t = 0; t < TN->size(); ++t) {
      const auto& theta = (*TN)[t];
      bool inv = true;
      for (const Perm& g : G.generators()) inv = inv && conjugate(theta, g) == theta;
      for (std::size_t c = 0; c < N.classes().count() && inv; ++c)
        for (const Perm& a : spec.acting_group().generators())
          inv = inv && theta.at(spec.apply(a, N.classes().representative(c))) == theta[c];
      if (!inv) continue;
      json where = {{"N", to_json(N)}, {"theta", t}};
      try {
        auto iso = sigma(spec, N, theta, to);
        ++instances;
        if (!iso.ext.alpha->cocycle_identity() || !iso.ext.alpha->trivial_on_NA())
          fail(r, {{"cocycle", to_json(*iso.ext.alpha)}, {"where", where}});
        if (!iso.holds()) fail(r, {{"sigma", to_json(iso)}, {"where", where}});
        for (auto p : prime_divisors(G.order())) {
          auto f = block_fiber_check(iso, static_cast<std::uint32_t>(p));
          if (f.full_ramification) {
            ++fibers_full;
            if (!f.holds()) fail(r, {{"block_fibers", p}, {"mismatches", f.mismatches}, {"where", where}});
          } else {
            ++fibers_partial;
            partial_mismatches += f.mismatches;
          }
        }
      } catch (const TriplesOutOfScope& e) {
        r.details["skipped"].push_back({{"where", where}, {"reason", e.what()}});
      }
    }
  }
  r.details["instances"] = instances;
  r.details["block_fibers_full"] = fibers_full;
  r.details["block_fibers_partial"] = fibers_partial;
  r.details["block_fibers_partial_mismatches"] = partial_mismatches;
  if (instances == 0 && r.verdict == Verdict::pass) r.verdict = Verdict::skipped;
  return r;
}

CheckResult brauer_check(const ActionSpec& spec, std::uint32_t p, const VerifyOptions& opts) {
  const PermGroup& G = spec.group();
  CheckResult r{"brauer", p, Verdict::pass, json::object()};
  if (opts.skip_ibr) {
    r.verdict = Verdict::skipped;
    r.details["reason"] = "skipped by request";
    return r;
  }
  const auto io = ibr_options(opts);
  try {
    auto I = ibr(G, p, io);
    auto D = decomposition_matrix(G, p, io);
    std::vector<std::size_t> degrees;
    for (const auto& phi : I->irr) degrees.push_back(phi.degree);
    r.details["degrees"] = degrees;
    r.details["decomposition"] = to_json(D);
    auto T = character_table(G);
    for (std::size_t i = 0; i < D.rows(); ++i) {
      std::int64_t deg = 0;
      for (std::size_t c = 0; c < D.cols(); ++c) deg += D.entries[i][c] * static_cast<std::int64_t>(degrees[c]);
      if (deg != T->degree(i)) fail(r, {{"degree_bookkeeping", i}});
    }
    for (std::size_t c = 0; c < I->size(); ++c) block_of_brauer(G, p, c, io);
    if (I->size() != p_regular_classes(G, p).size()) fail(r, {{"count", I->size()}});
    auto count = brauer_count_report(spec, p, io);
    r.details["invariant_brauer"] = count.invariant_brauer;
    r.details["fixed_regular_classes"] = count.fixed_regular_classes;
  } catch (const IbrOutOfScope& e) {
    r.verdict = Verdict::skipped;
    r.details["reason"] = e.what();
  } catch (const SearchIncomplete& e) {
    r.verdict = Verdict::skipped;
    r.details["reason"] = e.what();
  } catch (const NonIntegralDecomposition& e) {
    fail(r, {{"decomposition", e.what()}});
  } catch (const BlockInconsistency& e) {
    fail(r, {{"coherence", e.what()}});
  }
  return r;
}

bool ScenarioReport::passed() const {
  return error.empty() &&
         std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.verdict == Verdict::fail; });
}

bool SuiteReport::passed() const {
  return std::all_of(scenarios.begin(), scenarios.end(), [](const ScenarioReport& s) { return s.passed(); });
}

ScenarioReport run_scenario(const ScenarioSpec& s, const VerifyOptions& base) {
  ScenarioReport out;
  out.name = s.name;
  VerifyOptions opts = base;
  opts.skip_ibr = opts.skip_ibr || s.skip_ibr;
  std::optional<ActionSpec> spec;
  try {
    PermGroup G = load_group(s.group.string());
    AutomorphismMaps maps;
    if (!s.automorphisms.empty()) maps = load_automorphisms(s.automorphisms.string(), G);
    spec.emplace(G, maps);
    if (!spec->coprime()) throw NotCoprime("action is not coprime");
  } catch (const std::exception& e) {
    out.error = e.what();
    return out;
  }
  const PermGroup& G = spec->group();
  out.group_order = G.order();
  out.acting_order = spec->acting_order();
  std::vector<std::uint32_t> primes = s.primes;
  if (primes.empty())
    for (auto p : prime_divisors(G.order())) primes.push_back(static_cast<std::uint32_t>(p));
  auto wants = [&](const std::string& c) {
    return s.checks.empty() ? c == "main-theorem" : std::find(s.checks.begin(), s.checks.end(), c) != s.checks.end();
  };
  // An exception inside a check is a failure of that check, not of the run.
  auto guarded = [&](const std::string& name, std::uint32_t p, auto&& run) {
    try {
      run();
    } catch (const std::exception& e) {
      out.checks.push_back({name, p, Verdict::fail, {{"error", e.what()}}});
    }
  };
  for (auto p : primes) {
    if (wants("main-theorem"))
      guarded("main-theorem", p, [&] { out.checks.push_back(verify_main_theorem(*spec, p, opts)); });
    if (wants("thmA-nu"))
      guarded("thmA-nu", p, [&] {
        for (auto& c : thmA_nu_checks(*spec, p, opts)) out.checks.push_back(std::move(c));
      });
    if (wants("gallagher")) guarded("gallagher", p, [&] { out.checks.push_back(gallagher_check(G, p, opts)); });
    if (wants("dade")) guarded("dade", p, [&] { out.checks.push_back(dade_check(G, p, opts)); });
    if (wants("brauer")) guarded("brauer", p, [&] { out.checks.push_back(brauer_check(*spec, p, opts)); });
  }
  if (wants("triples")) guarded("triples", 0, [&] { out.checks.push_back(triples_check(*spec, opts)); });
  return out;
}

std::vector<ScenarioSpec> parse_suite_config(const json& config, const std::filesystem::path& base) {
  static const std::vector<std::string> known = {"main-theorem", "thmA-nu", "gallagher", "dade", "triples", "brauer"};
  std::vector<ScenarioSpec> out;
  try {
    if (!config.is_object()) throw ConfigParse("suite config must be an object");
    if (!config.contains("scenarios")) return out;
    for (const auto& j : config.at("scenarios")) {
      ScenarioSpec s;
      s.name = j.at("name").get<std::string>();
      s.group = base / j.at("group").get<std::string>();
      if (j.contains("automorphisms")) s.automorphisms = base / j.at("automorphisms").get<std::string>();
      if (j.contains("primes")) s.primes = j.at("primes").get<std::vector<std::uint32_t>>();
      if (j.contains("checks")) s.checks = j.at("checks").get<std::vector<std::string>>();
      if (j.contains("skip_ibr")) s.skip_ibr = j.at("skip_ibr").get<bool>();
      for (const auto& c : s.checks)
        if (std::find(known.begin(), known.end(), c) == known.end())
          throw ConfigParse("scenario " + s.name + ": unknown check " + c);
      for (const auto& o : out)
        if (o.name == s.name) throw ConfigParse("duplicate scenario name " + s.name);
      out.push_back(std::move(s));
    }
  } catch (const json::exception& e) {
    throw ConfigParse(std::string("suite config: ") + e.what());
  }
  return out;
}

SuiteReport run_suite(const std::vector<ScenarioSpec>& scenarios, const VerifyOptions& opts) {
  SuiteReport out;
  for (const auto& s : scenarios) out.scenarios.push_back(run_scenario(s, opts));
  std::sort(out.scenarios.begin(), out.scenarios.end(),
            [](const ScenarioReport& a, const ScenarioReport& b) { return a.name < b.name; });
  return out;
}

json to_json(const CheckResult& c) {
  json j = {{"check", c.check}, {"verdict", to_string(c.verdict)}, {"details", c.details}};
  if (c.prime) j["prime"] = c.prime;
  return j;
}

json to_json(const ScenarioReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  json j = {{"name", r.name},
            {"group_order", r.group_order},
            {"acting_order", r.acting_order},
            {"checks", checks},
            {"verdict", r.passed() ? "PASS" : "FAIL"}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

json to_json(const SuiteReport& r) {
  json s = json::array();
  for (const auto& x : r.scenarios) s.push_back(to_json(x));
  return {{"scenarios", s}, {"verdict", r.passed() ? "PASS" : "FAIL"}};
}

}  // namespace bb
