// Acceptance run: one PASS/FAIL line per criterion.  Run from the source
// directory; the path of the command-line tool is baked in at build time.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "bb/brauer.hpp"
#include "bb/classes.hpp"
#include "bb/gallagher.hpp"
#include "bb/io.hpp"
#include "bb/named_groups.hpp"
#include "bb/verify.hpp"
#include "linkage.hpp"

using namespace bb;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

// Pinned limits.
constexpr double kTableSeconds = 60;
constexpr double kSuiteSeconds = 15 * 60;
constexpr std::size_t kProductFormulaSamples = 500;
constexpr std::size_t kPairingSamples = 200;
constexpr std::uint64_t kIbrOrder = 2000;
constexpr std::uint64_t kSeed = 1;

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<std::uint32_t> primes_of(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (auto p : prime_divisors(n)) out.push_back(static_cast<std::uint32_t>(p));
  return out;
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note << " [" << what << "]";
    }
  }
};

// Small groups with |G| ≤ 2000 from the plain corpus and the named actions.
std::vector<std::pair<std::string, PermGroup>> small_corpus() {
  std::vector<std::pair<std::string, PermGroup>> out;
  for (const char* n : {"a4", "a5", "c2", "d10", "q8", "s3", "s4", "s5", "sl2_3"})
    out.push_back({n, load_group(std::string("data/corpus/") + n + ".json")});
  out.push_back({"D14", named::dihedral(7)});
  out.push_back({"F21", named::frobenius21()});
  out.push_back({"3^(1+2)", named::heisenberg3()});
  out.push_back({"C2^4", named::elementary_abelian2(4)});
  return out;
}

void criterion1(Outcome& o) {
  for (const char* n : {"s3", "s4", "a4", "a5", "sl2_3", "q8", "sz8"}) {
    PermGroup G = load_group(std::string("data/corpus/") + n + ".json");
    auto t0 = Clock::now();
    auto T = character_table(G);
    const double dt = seconds_since(t0);
    const auto& K = G.classes();
    std::int64_t sum = 0;
    for (auto d : T->degrees()) sum += d * d;
    bool rows = true, cols = true;
    for (std::size_t i = 0; i < T->size(); ++i)
      for (std::size_t j = 0; j < T->size(); ++j)
        rows = rows && inner_product((*T)[i], (*T)[j]) == Cyclotomic(i == j ? 1 : 0);
    for (std::size_t a = 0; a < K.count(); ++a)
      for (std::size_t b = 0; b < K.count(); ++b) {
        Cyclotomic s;
        for (std::size_t i = 0; i < T->size(); ++i) s += (*T)[i][a] * (*T)[i][b].conj();
        Cyclotomic want = a == b ? Cyclotomic(static_cast<std::int64_t>(K.centralizer_order(a))) : Cyclotomic(0);
        cols = cols && s == want;
      }
    o.require(sum == static_cast<std::int64_t>(G.order()), std::string(n) + " sum of squares");
    o.require(rows && cols, std::string(n) + " orthogonality");
    o.require(dt < kTableSeconds, std::string(n) + " time");
    o.note << ' ' << n << '=' << T->size() << " chars/" << dt << "s";
  }
}

std::set<std::multiset<std::int64_t>> block_degrees(const PermGroup& G, std::uint32_t p) {
  auto B = block_partition(G, p);
  std::set<std::multiset<std::int64_t>> out;
  for (const auto& b : B->blocks()) {
    std::multiset<std::int64_t> d;
    for (auto i : b.members) d.insert(B->table()->degree(i));
    out.insert(d);
  }
  return out;
}

void criterion2(Outcome& o) {
  std::size_t compared = 0;
  for (const auto& [name, G] : small_corpus())
    for (auto p : primes_of(G.order())) {
      std::set<std::vector<std::size_t>> ours;
      for (const auto& b : block_partition(G, p)->blocks()) ours.insert(b.members);
      o.require(ours == oracle::linkage_blocks(G, p), name + " p=" + std::to_string(p));
      ++compared;
    }
  PermGroup sz = load_group("data/corpus/sz8.json");
  for (auto p : primes_of(sz.order())) {
    std::set<std::vector<std::size_t>> ours;
    for (const auto& b : block_partition(sz, p)->blocks()) ours.insert(b.members);
    o.require(ours == oracle::linkage_blocks(sz, p), "Sz(8) p=" + std::to_string(p));
    ++compared;
  }
  // S3 at 2: {1, sgn} and {2}.  A5 at 2: {1,3,3,5} and {4}.
  o.require(block_degrees(named::symmetric(3), 2) == std::set<std::multiset<std::int64_t>>{{1, 1}, {2}}, "S3 p=2");
  o.require(block_degrees(named::alternating(5), 2) == std::set<std::multiset<std::int64_t>>{{1, 3, 3, 5}, {4}},
            "A5 p=2");
  o.note << ' ' << compared << " partitions compared";
}

struct SuiteRuns {
  json first, second;
  std::string first_bytes, second_bytes;
  double first_seconds = 0;
  int first_rc = -1, second_rc = -1;
};

int run_tool(const std::string& args) {
  std::string cmd = std::string(BBVERIFY) + " " + args + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

SuiteRuns run_suites() {
  SuiteRuns r;
  fs::path dir = fs::temp_directory_path() / "bb_acceptance";
  fs::create_directories(dir);
  const std::string seed = " --seed " + std::to_string(kSeed);
  auto t0 = Clock::now();
  r.first_rc = run_tool("suite data/suite.json --out " + (dir / "first.json").string() + seed);
  r.first_seconds = seconds_since(t0);
  r.second_rc = run_tool("suite data/suite.json --out " + (dir / "second.json").string() + seed);
  r.first_bytes = slurp(dir / "first.json");
  r.second_bytes = slurp(dir / "second.json");
  try {
    r.first = json::parse(r.first_bytes);
    r.second = json::parse(r.second_bytes);
  } catch (const json::exception&) {
  }
  return r;
}

// Every check named `check` across the suite report.
void for_checks(const json& report, const std::string& check, const std::function<void(const json&, const json&)>& f) {
  if (!report.contains("scenarios")) return;
  for (const auto& s : report["scenarios"])
    for (const auto& c : s["checks"])
      if (c["check"] == check) f(s, c);
}

void criterion3(Outcome& o, const SuiteRuns& runs) {
  o.require(runs.first_rc == 0, "suite exit code " + std::to_string(runs.first_rc));
  o.require(runs.first_seconds < kSuiteSeconds, "suite time");
  std::size_t blocks = 0, with_ibr = 0, scenarios_checked = 0;
  std::set<std::string> seen;
  for_checks(runs.first, "main-theorem", [&](const json& s, const json& c) {
    seen.insert(s["name"].get<std::string>());
    o.require(c["verdict"] == "PASS", s["name"].get<std::string>() + " p=" + c["prime"].dump());
    const bool small = s["group_order"].get<std::uint64_t>() <= kIbrOrder;
    for (const auto& b : c["details"]["blocks"]) {
      ++blocks;
      const bool inv = b["invariant"].get<bool>();
      o.require(inv == !b["invariant_characters"].empty(), "(i)<=>(ii)");
      if (b.contains("invariant_brauer")) {
        ++with_ibr;
        o.require(inv == !b["invariant_brauer"].empty(), "(i)<=>(iii)");
      } else if (small) {
        o.require(false, s["name"].get<std::string>() + ": IBr did not complete");
      }
    }
  });
  for (const auto& s : runs.first["scenarios"]) {
    ++scenarios_checked;
    if (s["acting_order"].get<std::uint64_t>() > 1)
      o.require(seen.count(s["name"].get<std::string>()) == 1, s["name"].get<std::string>() + " not swept");
  }
  o.require(blocks > 0, "no blocks");
  o.note << ' ' << scenarios_checked << " scenarios, " << blocks << " blocks, " << with_ibr << " with IBr, "
         << runs.first_seconds << "s";
}

ClassFunction sl2_3_extension(const PermGroup& G, const PermGroup& N) {
  for (const auto& chi : character_table(G)->irr()) {
    auto r = restrict(chi, N);
    if (chi.degree() == 2 && inner_product(r, r) == Cyclotomic(1)) return chi;
  }
  throw std::logic_error("no extension");
}

void criterion4(Outcome& o) {
  PermGroup G = load_group("data/corpus/sl2_3.json");
  PermGroup N = load_subgroup("data/corpus/sl2_3.q8.json", G);
  auto q = quotient(G, N);
  auto r = upsilon(sl2_3_extension(G, N), N, q, 2);
  o.require(r.map.size() == 3, "three blocks of G/N");
  o.require(r.covering.size() == 1, "one block over b");
  o.require(r.fibers.size() == 1 && r.fibers.front().size() == 3, "fiber of size 3");
  o.require(r.well_defined && r.surjective && !r.bijective, "onto, not injective");
}

void criterion5(Outcome& o) {
  std::mt19937_64 rng(kSeed);
  std::size_t regime_instances = 0, samples = 0;
  for (const auto& [name, G] : small_corpus()) {
    auto T = character_table(G);
    for (const auto& N : normal_subgroups(G)) {
      if (N.order() == 1 || N.order() == G.order()) continue;
      auto q = quotient(G, N);
      auto TQ = character_table(q.group);
      const auto& E = G.elements();
      std::uniform_int_distribution<std::size_t> pick_g(0, E.size() - 1), pick_eta(0, TQ->size() - 1);
      for (const auto& tt : T->irr()) {
        auto r = restrict(tt, N);
        if (!(inner_product(r, r) == Cyclotomic(1))) continue;
        for (auto p : primes_of(G.order())) {
          auto rep = bijectivity_regimes(tt, N, q, p);
          if (!rep.regimes.empty()) {
            ++regime_instances;
            o.require(rep.bijective, name + " regime without bijection");
          }
        }
        for (int s = 0; s < 6; ++s) {
          ++samples;
          o.require(product_formula_check(tt, N, q, pick_eta(rng), E[pick_g(rng)]).holds(), name + " product formula");
        }
      }
    }
  }
  o.require(samples >= kProductFormulaSamples, "too few product-formula samples");
  o.require(regime_instances > 0, "no regime instances");
  o.note << ' ' << regime_instances << " regime instances, " << samples << " product-formula samples";
}

void criterion6(Outcome& o, const SuiteRuns& runs) {
  std::size_t pairings = 0, blocks = 0, quotients = 0, checks = 0;
  for_checks(runs.first, "dade", [&](const json& s, const json& c) {
    ++checks;
    o.require(c["verdict"] == "PASS", s["name"].get<std::string>() + " p=" + c["prime"].dump());
    o.require(s["group_order"].get<std::uint64_t>() <= kIbrOrder, "dade on a large group");
    pairings += c["details"]["pairing_samples"].get<std::size_t>();
    blocks += c["details"]["invariant_blocks"].get<std::size_t>();
    quotients += c["details"]["quotient_checks"].get<std::size_t>();
  });
  o.require(checks > 0, "no dade checks");
  o.require(pairings >= kPairingSamples, "too few pairing samples");
  o.note << ' ' << pairings << " pairing samples, " << blocks << " invariant blocks, " << quotients
         << " quotient checks";
}

void criterion7(Outcome& o, const SuiteRuns& runs) {
  std::size_t instances = 0, full = 0, equivariant = 0;
  for_checks(runs.first, "triples", [&](const json& s, const json& c) {
    o.require(c["verdict"] == "PASS", s["name"].get<std::string>());
    instances += c["details"]["instances"].get<std::size_t>();
    full += c["details"]["block_fibers_full"].get<std::size_t>();
    if (s["acting_order"].get<std::uint64_t>() > 1) equivariant += c["details"]["instances"].get<std::size_t>();
  });
  o.require(instances > 0 && full > 0 && equivariant > 0, "empty sweep");
  o.note << ' ' << instances << " triples (" << equivariant << " with A nontrivial), " << full
         << " fiber checks with G[b]=G";
}

std::multiset<std::size_t> ibr_degrees(const PermGroup& G, std::uint32_t p) {
  std::multiset<std::size_t> out;
  for (const auto& phi : ibr(G, p)->irr) out.insert(phi.degree);
  return out;
}

void criterion8(Outcome& o, const SuiteRuns& runs) {
  o.require(ibr_degrees(named::alternating(5), 2) == std::multiset<std::size_t>{1, 2, 2, 4}, "A5 mod 2");
  o.require(ibr_degrees(named::symmetric(3), 3) == std::multiset<std::size_t>{1, 1}, "S3 mod 3");
  std::size_t matrices = 0;
  for (const auto& [name, G] : small_corpus())
    for (auto p : primes_of(G.order())) {
      try {
        auto D = decomposition_matrix(G, p);
        for (const auto& row : D.entries)
          for (auto x : row) o.require(x >= 0, name + " negative entry");
        for (std::size_t c = 0; c < D.cols(); ++c) block_of_brauer(G, p, c);
        ++matrices;
      } catch (const std::exception& e) {
        o.require(false, name + " p=" + std::to_string(p) + ": " + e.what());
      }
    }
  for_checks(runs.first, "brauer", [&](const json& s, const json& c) {
    o.require(c["verdict"] == "PASS", s["name"].get<std::string>() + " p=" + c["prime"].dump());
  });
  o.note << ' ' << matrices << " decomposition matrices";
}

void criterion9(Outcome& o, const SuiteRuns& runs) {
  o.require(!runs.first_bytes.empty(), "empty report");
  o.require(runs.first_bytes == runs.second_bytes, "reports differ");
  o.require(runs.second_rc == runs.first_rc, "exit codes differ");
  o.note << ' ' << runs.first_bytes.size() << " bytes";
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](int n, const std::function<void(Outcome&)>& f) {
    Outcome o;
    try {
      f(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << o.note.str() << std::endl;
  };
  report(1, criterion1);
  report(2, criterion2);
  SuiteRuns runs;
  try {
    runs = run_suites();
  } catch (const std::exception&) {
  }
  report(3, [&](Outcome& o) { criterion3(o, runs); });
  report(4, criterion4);
  report(5, criterion5);
  report(6, [&](Outcome& o) { criterion6(o, runs); });
  report(7, [&](Outcome& o) { criterion7(o, runs); });
  report(8, [&](Outcome& o) { criterion8(o, runs); });
  report(9, [&](Outcome& o) { criterion9(o, runs); });
  return all ? 0 : 1;
}
