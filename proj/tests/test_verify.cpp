#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "bb/io.hpp"
#include "bb/named_groups.hpp"
#include "bb/verify.hpp"
#include "doctest.h"

using namespace bb;
namespace fs = std::filesystem;

namespace {

ActionSpec spec_of(const named::NamedAction& na) { return ActionSpec(na.group, na.action); }

int run_cli(const std::string& args) {
  std::string cmd = std::string(BBVERIFY) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch_dir() {
  fs::path d = fs::temp_directory_path() / "bbverify_test";
  fs::create_directories(d);
  return d;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("main theorem with a trivial action") {
  for (const PermGroup& G : {named::symmetric(4), named::sl2_3(), named::alternating(5)}) {
    auto spec = trivial_action_spec(G);
    for (auto p : prime_divisors(G.order())) {
      auto r = verify_main_theorem(spec, static_cast<std::uint32_t>(p));
      CHECK(r.verdict == Verdict::pass);
      for (const auto& b : r.details["blocks"]) {
        CHECK(b["invariant"].get<bool>());
        CHECK(b["invariant_characters"].size() == b["members"].size());
        CHECK_FALSE(b["invariant_brauer"].empty());
      }
    }
  }
}

TEST_CASE("main theorem for Q8 with C3 at p = 2") {
  auto r = verify_main_theorem(spec_of(named::q8_c3()), 2);
  REQUIRE(r.verdict == Verdict::pass);
  REQUIRE(r.details["blocks"].size() == 1);
  const auto& b = r.details["blocks"][0];
  CHECK(b["invariant"].get<bool>());
  // Trivial character and the degree-2 character; the trivial Brauer character.
  auto T = character_table(named::quaternion());
  auto chars = b["invariant_characters"].get<std::vector<std::size_t>>();
  REQUIRE(chars.size() == 2);
  CHECK(T->degree(chars[0]) == 1);
  CHECK(T->degree(chars[1]) == 2);
  CHECK(b["invariant_brauer"] == nlohmann::json::array({0}));
}

TEST_CASE("main theorem rejects non-coprime actions") {
  // Conjugation by a transposition: an automorphism of order 2 of S3.
  PermGroup S = named::symmetric(3);
  std::vector<Perm> images;
  const Perm t = Perm::from_cycles("(1,2)", 3);
  for (const Perm& g : S.generators()) images.push_back(g.conjugate_by(t));
  ActionSpec bad(S, AutomorphismMaps{{images}});
  REQUIRE_FALSE(bad.coprime());
  CHECK_THROWS_AS(verify_main_theorem(bad, 3), NotCoprime);
}

TEST_CASE("invariant characters over a central p-subgroup") {
  auto spec = spec_of(named::heisenberg3_q8());
  const PermGroup& G = spec.group();
  auto checks = thmA_nu_checks(spec, 3);
  CHECK(checks.size() == 3);  // A is trivial on Z(G), so every ν is invariant
  for (const auto& c : checks) CHECK(c.verdict == Verdict::pass);
  // Z = 1 reduces to the main theorem.
  auto r = verify_thmA_nu(spec, PermGroup::trivial(G.degree()), 0, 3);
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.details["blocks"].size() == invariant_blocks(spec, 3).size());
  CHECK_THROWS_AS(verify_thmA_nu(spec, G, 0, 3), NotCentralP);
}

TEST_CASE("suite configuration") {
  CHECK(parse_suite_config(nlohmann::json::object(), ".").empty());
  CHECK(run_suite({}).passed());
  CHECK_THROWS_AS(parse_suite_config(nlohmann::json::array(), "."), ConfigParse);
  CHECK_THROWS_AS(parse_suite_config({{"scenarios", {{{"group", "x.json"}}}}}, "."), ConfigParse);
  CHECK_THROWS_AS(parse_suite_config({{"scenarios", {{{"name", "x"}, {"group", "x.json"}, {"checks", {"nope"}}}}}}, "."),
                  ConfigParse);

  auto specs = parse_suite_config(read_json_file("data/suite.json"), "data");
  CHECK(specs.size() >= 15);
  std::vector<ScenarioSpec> small;
  for (const auto& s : specs)
    if (s.name == "q8_c3" || s.name == "s3" || s.name == "c7_c3") small.push_back(s);
  REQUIRE(small.size() == 3);
  auto a = to_json(run_suite(small)).dump();
  auto b = to_json(run_suite(small)).dump();
  CHECK(a == b);
  CHECK(run_suite(small).passed());
}

TEST_CASE("a corrupted automorphism file is reported") {
  fs::path d = scratch_dir();
  write(d / "bad.aut.json", R"J({"images": [["(1,2)", "(1,2)"]]})J");
  ScenarioSpec s;
  s.name = "bad";
  s.group = "data/corpus/q8_c3.json";
  s.automorphisms = d / "bad.aut.json";
  auto r = run_scenario(s);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.error.empty());
  CHECK(to_json(r)["verdict"] == "FAIL");
}

TEST_CASE("command-line exit codes") {
  fs::path d = scratch_dir();
  const std::string root = fs::current_path().string();
  write(d / "empty.json", R"({"scenarios": []})");
  write(d / "bad.aut.json", R"J({"images": [["(1,2)", "(1,2)"]]})J");
  write(d / "broken.json", R"({"scenarios": [{"name": "bad", "group": ")" + root +
                               R"(/data/corpus/q8_c3.json", "automorphisms": "bad.aut.json"}]})");
  CHECK(run_cli("suite " + (d / "empty.json").string()) == 0);
  CHECK(run_cli("suite " + (d / "broken.json").string()) == 1);
  CHECK(run_cli("verify-main data/corpus/q8_c3.json --aut data/corpus/q8_c3.aut.json --p 2") == 0);
  CHECK(run_cli("verify-main data/corpus/q8_c3.json --aut " + (d / "bad.aut.json").string()) == 2);
  CHECK(run_cli("verify-main data/corpus/q8_c3.json") == 2);
  CHECK(run_cli("chartable data/corpus/s3.json") == 0);
  CHECK(run_cli("blocks data/corpus/a5.json --p 2") == 0);
  CHECK(run_cli("brauer data/corpus/a5.json --p 2") == 0);
  CHECK(run_cli("dade data/corpus/sl2_3.json --normal data/corpus/sl2_3.q8.json --p 2") == 0);
  CHECK(run_cli("gallagher data/corpus/sl2_3.json --normal data/corpus/sl2_3.q8.json --p 2") == 0);
  CHECK(run_cli("triples data/corpus/sl2_3.json --normal data/corpus/sl2_3.q8.json --p 3") == 0);
  CHECK(run_cli("blocks data/corpus/a5.json --p 4") == 2);
  CHECK(run_cli("nonsense") == 2);
}
