#include <random>
#include <set>

#include "bb/gallagher.hpp"
#include "bb/named_groups.hpp"
#include "corpus.hpp"
#include "doctest.h"

using namespace bb;

namespace {

struct Extension {
  PermGroup G, N;
  std::size_t theta_tilde;  // index in Irr(G)
};

// (G, N ⊴ G, θ̃ ∈ Irr(G)) with θ̃_N irreducible, over the small corpus.
std::vector<Extension> extensions() {
  std::vector<Extension> out;
  for (const auto& [name, G] : testcorpus::small_groups()) {
    auto T = character_table(G);
    for (const auto& N : normal_subgroups(G))
      for (std::size_t i = 0; i < T->size(); ++i) {
        ClassFunction r = restrict((*T)[i], N);
        if (inner_product(r, r) == Cyclotomic(1)) out.push_back({G, N, i});
      }
  }
  return out;
}

std::vector<std::uint32_t> primes_of(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (auto p : prime_divisors(n)) out.push_back(static_cast<std::uint32_t>(p));
  return out;
}

}  // namespace

TEST_CASE("upsilon with trivial N is the identity") {
  for (const auto& [name, G] : testcorpus::small_groups()) {
    PermGroup one = PermGroup::trivial(G.degree());
    auto q = quotient(G, one);
    for (auto p : primes_of(G.order())) {
      auto r = upsilon((*character_table(G))[0], one, q, p);
      CHECK(r.bijective);
      CHECK(r.covering.size() == block_partition(G, p)->size());
      // The quotient's blocks correspond to G's blocks through the regular action.
      auto BQ = block_partition(q.group, p);
      auto BG = block_partition(G, p);
      for (std::size_t beta = 0; beta < BQ->size(); ++beta)
        CHECK((*BQ)[beta].members.size() == (*BG)[r.map[beta]].members.size());
    }
  }
}

TEST_CASE("SL2(3) over Q8 at p = 2") {
  PermGroup G = named::sl2_3();
  PermGroup N = sylow(G, 2);
  auto q = quotient(G, N);
  auto T = character_table(G);
  std::optional<ClassFunction> tt;
  for (const auto& chi : T->irr()) {
    ClassFunction r = restrict(chi, N);
    if (chi.degree() == 2 && inner_product(r, r) == Cyclotomic(1)) tt = chi;
  }
  REQUIRE(tt);
  auto r = bijectivity_regimes(*tt, N, q, 2);
  CHECK(r.map.size() == 3);
  CHECK(r.covering.size() == 1);
  CHECK(r.fibers.front().size() == 3);
  CHECK(r.well_defined);
  CHECK(r.surjective);
  CHECK_FALSE(r.bijective);
  CHECK(r.regimes.empty());
  CHECK(r.consistent());
  auto j = to_json(r);
  CHECK(j["regimes"][0] == "none");
}

TEST_CASE("block map sweep and regimes") {
  std::size_t reports = 0, in_regime = 0;
  std::set<Regime> seen;
  for (const auto& e : extensions()) {
    auto q = quotient(e.G, e.N);
    const ClassFunction& tt = (*character_table(e.G))[e.theta_tilde];
    for (auto p : primes_of(e.G.order())) {
      auto r = bijectivity_regimes(tt, e.N, q, p);
      ++reports;
      CHECK(r.consistent());
      if (!r.regimes.empty()) {
        ++in_regime;
        CHECK(r.bijective);
      }
      seen.insert(r.regimes.begin(), r.regimes.end());
    }
  }
  CHECK(reports > 100);
  CHECK(in_regime > 0);
  CHECK(seen.size() == 3);
}

TEST_CASE("product formula") {
  std::mt19937_64 rng(7);
  std::size_t evaluations = 0;
  for (const auto& e : extensions()) {
    if (e.N.order() == 1 || e.N.order() == e.G.order()) continue;
    auto q = quotient(e.G, e.N);
    const ClassFunction& tt = (*character_table(e.G))[e.theta_tilde];
    const auto& E = e.G.elements();
    auto TQ = character_table(q.group);
    std::uniform_int_distribution<std::size_t> pick_g(0, E.size() - 1), pick_eta(0, TQ->size() - 1);
    for (int s = 0; s < 4; ++s) {
      Perm g = E[pick_g(rng)];
      CHECK(product_formula_check(tt, e.N, q, pick_eta(rng), g).holds());
      ++evaluations;
    }
    // g = 1 and η̄ trivial.
    CHECK(product_formula_check(tt, e.N, q, 0, e.G.identity()).holds());
  }
  CHECK(evaluations >= 500);
}

TEST_CASE("defect-zero coset identity") {
  std::size_t checked = 0, nontrivial_witness = 0;
  for (const auto& e : extensions()) {
    auto q = quotient(e.G, e.N);
    const ClassFunction& tt = (*character_table(e.G))[e.theta_tilde];
    for (auto p : primes_of(e.G.order())) {
      if (p_part(static_cast<std::uint64_t>(tt.degree()), p) != p_part(e.N.order(), p)) {
        CHECK_THROWS_AS(defect_zero_identity_check(tt, e.N, q, e.G.identity(), p), NotDefectZero);
        continue;
      }
      for (const Perm& r : q.coset_reps) {
        auto d = defect_zero_identity_check(tt, e.N, q, r, p);
        CHECK(d.holds());
        ++checked;
        if (d.nonvanishing && !d.nonvanishing->is_identity()) ++nontrivial_witness;
      }
    }
  }
  CHECK(checked > 100);
  CHECK(nontrivial_witness > 0);
  // S3 over A3 at p = 3 is not defect zero for the trivial character of A3,
  // but at p = 2 every character of A3 is.
  PermGroup s3 = named::symmetric(3);
  PermGroup a3 = subgroup(s3, {Perm::from_cycles("(1,2,3)", 3)});
  auto q = quotient(s3, a3);
  for (const Perm& r : q.coset_reps) CHECK(defect_zero_identity_check((*character_table(s3))[0], a3, q, r, 2).holds());
}

TEST_CASE("extension transfer") {
  std::size_t instances = 0, with_extensions = 0;
  for (const auto& [name, G] : testcorpus::small_groups()) {
    auto normals = normal_subgroups(G);
    for (const auto& N : normals)
      for (const auto& D : normals) {
        if (!N.contains(D)) continue;
        auto TD = character_table(D);
        for (const auto& mu : TD->irr()) {
          bool inv = true;
          for (const Perm& g : G.generators()) inv = inv && conjugate(mu, g) == mu;
          if (!inv) continue;
          for (auto p : primes_of(G.order())) {
            auto t = extension_transfer_check(G, N, D, mu, p);
            CHECK(t.holds());
            ++instances;
            with_extensions += !t.rdz_extending.empty();
            if (D.order() == 1) CHECK(t.dz == t.rdz);
          }
        }
      }
  }
  CHECK(instances > 100);
  CHECK(with_extensions > 0);
  // D = Z(Q8) in SL2(3), p = 2.
  PermGroup G = named::sl2_3();
  PermGroup N = sylow(G, 2);
  PermGroup Z = center(G);
  auto TZ = character_table(Z);
  for (const auto& mu : TZ->irr()) CHECK(extension_transfer_check(G, N, Z, mu, 2).holds());
}
