// Command-line front end: tables, blocks, theorem checks and the scenario suite.

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "bb/brauer.hpp"
#include "bb/dade.hpp"
#include "bb/gallagher.hpp"
#include "bb/io.hpp"
#include "bb/triples.hpp"
#include "bb/verify.hpp"

using namespace bb;
using nlohmann::json;

namespace {

struct Args {
  std::string group, aut, normal, config, out;
  std::uint32_t p = 0;
  std::uint64_t seed = 1;
  double budget = 0;
  bool skip_ibr = false;
};

VerifyOptions verify_options(const Args& a) {
  VerifyOptions o;
  o.seed = a.seed;
  o.budget_seconds = a.budget;
  o.skip_ibr = a.skip_ibr;
  return o;
}

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(1) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw ParseError("cannot write " + out);
  f << j.dump(1) << '\n';
}

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw ParseError("--p must be a prime");
}

bool invariant_under(const PermGroup& G, const ClassFunction& theta) {
  for (const Perm& g : G.generators())
    if (!(conjugate(theta, g) == theta)) return false;
  return true;
}

int cmd_chartable(const Args& a) {
  emit(to_json(*character_table(load_group(a.group))), a.out);
  return 0;
}

int cmd_blocks(const Args& a) {
  PermGroup G = load_group(a.group);
  require_prime(a.p);
  emit(to_json(*block_partition(G, a.p)), a.out);
  return 0;
}

int cmd_verify_main(const Args& a) {
  ScenarioSpec s;
  s.name = a.group;
  s.group = a.group;
  s.automorphisms = a.aut;
  if (a.p) s.primes = {a.p};
  s.checks = {"main-theorem"};
  auto r = run_scenario(s, verify_options(a));
  if (!r.error.empty()) throw ParseError(r.error);
  emit(to_json(r), a.out);
  return r.passed() ? 0 : 1;
}

int cmd_dade(const Args& a) {
  PermGroup G = load_group(a.group);
  PermGroup N = load_subgroup(a.normal, G);
  if (!is_normal(G, N)) throw ParseError("--normal is not a normal subgroup");
  require_prime(a.p);
  json out = json::array();
  bool ok = true;
  auto BN = block_partition(N, a.p);
  for (std::size_t b = 0; b < BN->size(); ++b) {
    bool inv = true;
    for (const Perm& g : G.generators()) inv = inv && conjugate_block(N, b, g, a.p) == b;
    if (!inv) continue;
    auto uc = unique_covering_check(G, N, b, a.p);
    ok = ok && uc.holds();
    out.push_back({{"block", b},
                   {"ramification", to_json(ramification_group(G, N, b, a.p))},
                   {"intermediate", uc.intermediate},
                   {"covering_counts", uc.covering_counts},
                   {"unique_covering", uc.holds()}});
  }
  emit(out, a.out);
  return ok ? 0 : 1;
}

int cmd_gallagher(const Args& a) {
  PermGroup G = load_group(a.group);
  PermGroup N = load_subgroup(a.normal, G);
  if (!is_normal(G, N)) throw ParseError("--normal is not a normal subgroup");
  require_prime(a.p);
  auto q = quotient(G, N);
  auto T = character_table(G);
  json out = json::array();
  bool ok = true;
  for (std::size_t i = 0; i < T->size(); ++i) {
    auto r = restrict((*T)[i], N);
    if (!(inner_product(r, r) == Cyclotomic(1))) continue;
    auto rep = bijectivity_regimes((*T)[i], N, q, a.p);
    ok = ok && rep.consistent();
    out.push_back({{"theta_tilde", i}, {"report", to_json(rep)}});
  }
  emit(out, a.out);
  return ok ? 0 : 1;
}

int cmd_triples(const Args& a) {
  PermGroup G = load_group(a.group);
  PermGroup N = load_subgroup(a.normal, G);
  if (!is_normal(G, N)) throw ParseError("--normal is not a normal subgroup");
  AutomorphismMaps maps;
  if (!a.aut.empty()) maps = load_automorphisms(a.aut, G);
  ActionSpec spec(G, maps);
  if (!spec.coprime()) throw ParseError("action is not coprime");
  TriplesOptions to;
  to.seed = a.seed;
  json out = json::array();
  bool ok = true;
  auto TN = character_table(N);
  for (std::size_t t = 0; t < TN->size(); ++t) {
    const auto& theta = (*TN)[t];
    bool inv = invariant_under(G, theta);
    for (const Perm& x : spec.acting_group().generators()) inv = inv && act(spec, theta, x) == theta;
    if (!inv) continue;
    auto iso = sigma(spec, N, theta, to);
    ok = ok && iso.holds() && iso.ext.alpha->cocycle_identity();
    json j = to_json(iso);
    j["theta"] = t;
    if (a.p) {
      auto f = block_fiber_check(iso, a.p);
      j["block_fibers"] = {{"prime", a.p},
                           {"full_ramification", f.full_ramification},
                           {"pairs", f.pairs},
                           {"mismatches", f.mismatches}};
      if (f.full_ramification) ok = ok && f.holds();
    }
    out.push_back(std::move(j));
  }
  emit(out, a.out);
  return ok ? 0 : 1;
}

int cmd_brauer(const Args& a) {
  PermGroup G = load_group(a.group);
  require_prime(a.p);
  IbrOptions io;
  io.seed = a.seed;
  io.budget_seconds = a.budget;
  json out = to_json(*ibr(G, a.p, io));
  out["decomposition"] = to_json(decomposition_matrix(G, a.p, io));
  emit(out, a.out);
  return 0;
}

int cmd_suite(const Args& a) {
  std::filesystem::path cfg(a.config);
  auto scenarios = parse_suite_config(read_json_file(a.config), cfg.parent_path());
  SuiteReport report;
  for (const auto& s : scenarios) {
    auto t0 = std::chrono::steady_clock::now();
    report.scenarios.push_back(run_scenario(s, verify_options(a)));
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    const auto& r = report.scenarios.back();
    std::cerr << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << dt.count() << " s)\n";
  }
  std::sort(report.scenarios.begin(), report.scenarios.end(),
            [](const ScenarioReport& x, const ScenarioReport& y) { return x.name < y.name; });
  emit(to_json(report), a.out);
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block and character checks for finite permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_option("--seed", a.seed, "random seed")->capture_default_str();
  app.add_option("--budget", a.budget, "IBr search budget in seconds (0: none)");
  app.add_flag("--skip-ibr", a.skip_ibr, "skip Brauer character computations");

  auto group_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("group", a.group, "group JSON file")->required();
    c->add_option("--out", a.out, "write the report here instead of stdout");
    return c;
  };
  auto* chartable = group_cmd("chartable", "character table");
  auto* blocks = group_cmd("blocks", "p-blocks");
  blocks->add_option("--p", a.p)->required();
  auto* verify_main = group_cmd("verify-main", "main theorem over every block");
  verify_main->add_option("--aut", a.aut, "automorphism JSON file")->required();
  verify_main->add_option("--p", a.p, "prime (default: every p | |G|)");
  auto* dade = group_cmd("dade", "ramification groups of G-invariant blocks of N");
  dade->add_option("--normal", a.normal)->required();
  dade->add_option("--p", a.p)->required();
  auto* gallagher = group_cmd("gallagher", "block map from G/N to blocks over b");
  gallagher->add_option("--normal", a.normal)->required();
  gallagher->add_option("--p", a.p)->required();
  auto* triples = group_cmd("triples", "character-triple isomorphisms over N");
  triples->add_option("--normal", a.normal)->required();
  triples->add_option("--aut", a.aut);
  triples->add_option("--p", a.p, "also compare block fibers at p");
  auto* brauer = group_cmd("brauer", "irreducible Brauer characters and decomposition matrix");
  brauer->add_option("--p", a.p)->required();
  auto* suite = app.add_subcommand("suite", "run a scenario suite");
  suite->add_option("config", a.config)->required();
  suite->add_option("--out", a.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    if (chartable->parsed()) return cmd_chartable(a);
    if (blocks->parsed()) return cmd_blocks(a);
    if (verify_main->parsed()) return cmd_verify_main(a);
    if (dade->parsed()) return cmd_dade(a);
    if (gallagher->parsed()) return cmd_gallagher(a);
    if (triples->parsed()) return cmd_triples(a);
    if (brauer->parsed()) return cmd_brauer(a);
    if (suite->parsed()) return cmd_suite(a);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ConfigParse& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "check aborted: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
