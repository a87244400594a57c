#include <algorithm>
#include <set>

#include "bb/actions.hpp"
#include "bb/classes.hpp"
#include "bb/io.hpp"
#include "bb/named_groups.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bb;

namespace {

// Brute force: A as the closure of the element maps, characters moved by
// evaluating χ at explicit preimages.
struct BruteAction {
  std::vector<std::vector<std::uint32_t>> elements_maps;  // all of A
  explicit BruteAction(const ActionSpec& spec) {
    for (const Perm& a : oracle::closure(spec.acting_group().generators(), spec.acting_group().degree())) {
      std::vector<std::uint32_t> m(a.degree());
      for (std::uint32_t i = 0; i < m.size(); ++i) m[i] = a[i];
      elements_maps.push_back(std::move(m));
    }
  }
};

std::set<std::size_t> brute_invariant_characters(const ActionSpec& spec) {
  const auto& G = spec.group();
  const auto& E = G.elements();
  auto T = character_table(G);
  BruteAction A(spec);
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < T->size(); ++i) {
    bool fixed = true;
    for (const auto& a : A.elements_maps)
      for (std::uint32_t x = 0; x < E.size() && fixed; ++x)
        fixed = (*T)[i].at(E[a[x]]) == (*T)[i].at(E[x]);
    if (fixed) out.insert(i);
  }
  return out;
}

std::size_t brute_fixed_classes(const ActionSpec& spec) {
  const auto& G = spec.group();
  const auto& K = G.classes();
  BruteAction A(spec);
  std::size_t n = 0;
  for (std::size_t c = 0; c < K.count(); ++c) {
    auto mem = K.members(c);
    std::set<std::uint32_t> s(mem.begin(), mem.end());
    bool fixed = true;
    for (const auto& a : A.elements_maps)
      for (auto x : mem) fixed = fixed && s.count(a[x]);
    n += fixed;
  }
  return n;
}

std::vector<ActionSpec> corpus_actions() {
  std::vector<ActionSpec> out;
  for (const auto& na : {named::q8_c3(), named::c7_c3(), named::f21_c2(), named::d14_c3(), named::heisenberg3_q8(),
                         named::c2_4_c5()})
    out.emplace_back(na.group, na.action);
  return out;
}

}  // namespace

TEST_CASE("coprimality") {
  CHECK(check_coprime(trivial_action_spec(named::symmetric(3))));
  auto q = named::q8_c3();
  ActionSpec qs(q.group, q.action);
  CHECK(qs.acting_order() == 3);
  CHECK(check_coprime(qs));
  // S3 with the inner automorphism by a transposition.
  PermGroup s3 = named::symmetric(3);
  Perm t = Perm::from_cycles("(1,2)", 3);
  std::vector<Perm> imgs;
  for (const Perm& g : s3.generators()) imgs.push_back(g.conjugate_by(t));
  ActionSpec inner(s3, AutomorphismMaps{{imgs}});
  CHECK(inner.acting_order() == 2);
  CHECK_FALSE(check_coprime(inner));
  CHECK_THROWS_AS(glauberman_count_check(inner), NotCoprime);
}

TEST_CASE("inner automorphisms fix every character") {
  for (const auto& G : {named::symmetric(4), named::sl2_3(), named::alternating(5)}) {
    AutomorphismMaps maps;
    for (const Perm& x : G.generators()) {
      std::vector<Perm> imgs;
      for (const Perm& g : G.generators()) imgs.push_back(g.conjugate_by(x));
      maps.images.push_back(imgs);
    }
    ActionSpec spec(G, maps);
    auto orb = act_on_characters(spec);
    CHECK(orb.fixed.size() == character_table(G)->size());
    CHECK(act_on_classes(spec).fixed.size() == G.classes().count());
  }
}

TEST_CASE("Q8 with C3") {
  auto q = named::q8_c3();
  ActionSpec spec(q.group, q.action);
  auto T = character_table(q.group);
  auto orb = act_on_characters(spec);
  std::multiset<std::size_t> sizes;
  for (const auto& o : orb.orbits) sizes.insert(o.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 1, 3});
  for (auto i : orb.fixed) CHECK((T->degree(i) == 1 ? i == 0 : T->degree(i) == 2));
  auto inv = invariant_blocks(spec, 2);
  CHECK(inv == std::vector<std::size_t>{0});
  auto gl = glauberman_count_check(spec);
  CHECK(gl.holds());
  CHECK(gl.fixed_classes == brute_fixed_classes(spec));
}

TEST_CASE("C7 with C3") {
  auto c = named::c7_c3();
  ActionSpec spec(c.group, c.action);
  CHECK(invariant_characters(spec) == std::vector<std::size_t>{0});
  CHECK(invariant_blocks(spec, 7) == std::vector<std::size_t>{0});
  auto gl = glauberman_count_check(spec);
  CHECK(gl.invariant_characters == 1);
  CHECK(gl.fixed_classes == brute_fixed_classes(spec));
  CHECK(gl.holds());
}

TEST_CASE("corpus actions against brute force") {
  for (const auto& spec : corpus_actions()) {
    REQUIRE(spec.coprime());
    auto inv = invariant_characters(spec);
    CHECK(std::set<std::size_t>(inv.begin(), inv.end()) == brute_invariant_characters(spec));
    auto gl = glauberman_count_check(spec);
    CHECK(gl.fixed_classes == brute_fixed_classes(spec));
    CHECK(gl.holds());

    const auto A = spec.acting_group();
    for (auto orb : {act_on_classes(spec), act_on_characters(spec)})
      for (const auto& o : orb.orbits) CHECK(A.order() % o.size() == 0);

    // (χ^a)^b = χ^{ab}.
    auto T = character_table(spec.group());
    const auto& elts = A.elements();
    for (std::size_t s = 0; s < std::min<std::size_t>(elts.size(), 6); ++s)
      for (std::size_t t = 0; t < std::min<std::size_t>(elts.size(), 6); ++t)
        for (const auto& chi : T->irr())
          CHECK(act(spec, act(spec, chi, elts[s]), elts[t]) == act(spec, chi, elts[s] * elts[t]));

    for (auto p : prime_divisors(spec.group().order())) {
      auto P = static_cast<std::uint32_t>(p);
      auto B = block_partition(spec.group(), P);
      auto borb = act_on_blocks(spec, P);
      for (const auto& o : borb.orbits) CHECK(A.order() % o.size() == 0);
      // Invariant blocks have A-stable defect group classes.
      for (auto b : borb.fixed) {
        const auto& D = (*B)[b].defect_group;
        for (const Perm& a : A.generators())
          CHECK(conjugating_element(spec.group(), D, spec.apply(a, D)).has_value());
      }
    }
  }
}

TEST_CASE("large corpus actions") {
  PermGroup sz = load_group("data/corpus/sz8.json");
  ActionSpec spec(sz, load_automorphisms("data/corpus/sz8.aut.json", sz));
  CHECK(spec.acting_order() == 3);
  CHECK(spec.coprime());
  CHECK(glauberman_count_check(spec).holds());
  for (std::uint32_t p : {2u, 5u, 7u, 13u}) {
    auto orb = act_on_blocks(spec, p);
    for (const auto& o : orb.orbits) CHECK((o.size() == 1 || o.size() == 3));
    CHECK_FALSE(orb.fixed.empty());
  }
}

TEST_CASE("orbit JSON") {
  auto q = named::q8_c3();
  auto j = to_json(act_on_characters(ActionSpec(q.group, q.action)));
  CHECK(j["kind"] == "irr");
  CHECK(j["orbits"].size() == 3);
}
