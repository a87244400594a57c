#include <random>

#include "bb/dade.hpp"
#include "bb/named_groups.hpp"
#include "corpus.hpp"
#include "doctest.h"

using namespace bb;

namespace {

struct Instance {
  PermGroup G, N;
  std::size_t theta;
};

// Every (G, N ⊴ G, θ ∈ Irr(N) G-invariant) over the small corpus.
std::vector<Instance> invariant_triples() {
  std::vector<Instance> out;
  for (const auto& [name, G] : testcorpus::small_groups())
    for (const auto& N : normal_subgroups(G)) {
      auto T = character_table(N);
      for (std::size_t i = 0; i < T->size(); ++i) {
        bool inv = true;
        for (const Perm& g : G.generators()) inv = inv && conjugate((*T)[i], g) == (*T)[i];
        if (inv) out.push_back({G, N, i});
      }
    }
  return out;
}

std::vector<std::uint32_t> primes_of(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (auto p : prime_divisors(n)) out.push_back(static_cast<std::uint32_t>(p));
  return out;
}

const ClassFunction& linear_faithful_on_centre(const PermGroup& Z) {
  auto T = character_table(Z);
  for (const auto& chi : T->irr())
    if (chi.kernel_classes().size() == 1) return chi;
  throw std::logic_error("no faithful linear character");
}

}  // namespace

TEST_CASE("pairing degenerate cases") {
  PermGroup G = named::sl2_3();
  PermGroup N = sylow(G, 2);
  auto T = character_table(N);
  std::size_t two = 0;
  while (T->degree(two) != 2) ++two;
  PairingContext ctx(G, N, (*T)[two]);
  PairingContext triv(G, N, (*T)[0]);
  for (const Perm& x : G.elements().all())
    for (const Perm& y : G.elements().all()) {
      if (N.contains(x)) CHECK(ctx.pairing(x, y) == Cyclotomic(1));
      CHECK(triv.pairing(x, y) == Cyclotomic(1));
      // All extensions of θ to N<y> give the same value.
      auto vals = ctx.pairing_all_extensions(x, y);
      for (const auto& v : vals) CHECK(v == vals.front());
    }
  PermGroup s3 = named::symmetric(3);
  PermGroup one = PermGroup::trivial(3);
  PairingContext c1(s3, one, (*character_table(one))[0]);
  CHECK_THROWS_AS(c1.pairing(Perm::from_cycles("(1,2)", 3), Perm::from_cycles("(2,3)", 3)), CommutatorNotInN);
}

TEST_CASE("pairing over a central subgroup") {
  // θ linear on a central N: ψ^x(y) = ψ(x y x^-1) = ψ(y)θ([y, x^-1]).
  for (const auto& G : {named::quaternion(), named::heisenberg3()}) {
    PermGroup Z = center(G);
    const ClassFunction& theta = linear_faithful_on_centre(Z);
    PairingContext ctx(G, Z, theta);
    for (const Perm& x : G.elements().all())
      for (const Perm& y : G.elements().all()) CHECK(ctx.pairing(x, y) == theta.at(commutator(y, x.inverse())));
    PermGroup M = perp(ctx, G, G);
    CHECK(M.same_group(Z));
    CHECK(perp(ctx, PermGroup::trivial(G.degree()), G).same_group(G));
    auto lemma = perp_restriction_invariant(ctx, G, G);
    // θ is faithful on Z(G) and G is nonabelian, so θ does not extend to G.
    CHECK_FALSE(lemma.has_value());
  }
}

TEST_CASE("pairing bimultiplicativity") {
  std::mt19937_64 rng(20240607);
  std::size_t checked = 0;
  for (const auto& inst : invariant_triples()) {
    PairingContext ctx(inst.G, inst.N, (*character_table(inst.N))[inst.theta]);
    const auto& E = inst.G.elements();
    std::uniform_int_distribution<std::size_t> pick(0, E.size() - 1);
    for (int trial = 0; trial < 12; ++trial) {
      Perm x1 = E[pick(rng)], x2 = E[pick(rng)], y = E[pick(rng)], y2 = E[pick(rng)];
      auto ok = [&](const Perm& a, const Perm& b) { return inst.N.contains(commutator(a, b)); };
      if (ok(x1, y) && ok(x2, y)) {
        CHECK(ctx.pairing(x1 * x2, y) == ctx.pairing(x1, y) * ctx.pairing(x2, y));
        ++checked;
      }
      if (ok(x1, y) && ok(x1, y2)) {
        CHECK(ctx.pairing(x1, y * y2) == ctx.pairing(x1, y) * ctx.pairing(x1, y2));
        ++checked;
      }
      if (ok(x1, y)) {
        auto vals = ctx.pairing_all_extensions(x1, y);
        for (const auto& v : vals) CHECK(v == vals.front());
      }
    }
  }
  CHECK(checked >= 200);
}

TEST_CASE("ramification group basics") {
  for (const auto& [name, G] : testcorpus::small_groups())
    for (auto p : primes_of(G.order())) {
      PermGroup one = PermGroup::trivial(G.degree());
      CHECK(ramification_group(G, one, 0, p).subgroup.same_group(G));
      auto BG = block_partition(G, p);
      for (std::size_t b = 0; b < BG->size(); ++b) CHECK(ramification_group(G, G, b, p).subgroup.same_group(G));
    }
  PermGroup sl = named::sl2_3();
  PermGroup q8 = sylow(sl, 2);
  auto r = ramification_group(sl, q8, 0, 2);
  CHECK(r.subgroup.same_group(q8));
  CHECK(r.all_choices);
  auto uc = unique_covering_check(sl, q8, 0, 2);
  CHECK(uc.holds());
  CHECK(uc.intermediate == std::vector<std::size_t>{0});

  PermGroup s3 = named::symmetric(3);
  PermGroup a3 = subgroup(s3, {Perm::from_cycles("(1,2,3)", 3)});
  CHECK_THROWS_AS(ramification_group(s3, a3, 1, 7), NotInvariantBlock);
}

TEST_CASE("ramification sweep: uniqueness of covering and choice independence") {
  std::size_t instances = 0, proper = 0;
  for (const auto& [name, G] : testcorpus::small_groups())
    for (const auto& N : normal_subgroups(G))
      for (auto p : primes_of(G.order())) {
        auto BN = block_partition(N, p);
        for (std::size_t b = 0; b < BN->size(); ++b) {
          bool inv = true;
          for (const Perm& g : G.generators()) inv = inv && conjugate_block(N, b, g, p) == b;
          if (!inv) continue;
          ++instances;
          auto r = ramification_group(G, N, b, p);
          CHECK(r.subgroup.contains(N));
          CHECK(is_normal(G, r.subgroup));
          proper += r.subgroup.order() < G.order();
          for (const auto& w : r.witnesses) {
            CHECK(w.result.same_group(r.subgroup));
            PairingContext ctx(join(w.H, w.K), w.dcn, (*character_table(w.dcn))[w.eta]);
            auto lemma = perp_restriction_invariant(ctx, w.H, w.K);
            if (lemma) CHECK(*lemma);
          }
          CHECK(unique_covering_check(G, N, b, p).holds());
        }
      }
  CHECK(instances > 50);
  CHECK(proper > 0);
}

TEST_CASE("quotient compatibility") {
  std::size_t instances = 0;
  for (const auto& [name, G] : testcorpus::small_groups()) {
    auto normals = normal_subgroups(G);
    for (const auto& N : normals)
      for (const auto& Z : normals) {
        if (Z.order() == 1 || intersection(N, Z).order() != 1) continue;
        for (auto p : primes_of(G.order())) {
          auto BN = block_partition(N, p);
          for (std::size_t b = 0; b < BN->size(); ++b) {
            bool inv = true;
            for (const Perm& g : G.generators()) inv = inv && conjugate_block(N, b, g, p) == b;
            if (!inv) continue;
            ++instances;
            CHECK(quotient_compat_check(G, N, b, Z, p).holds());
          }
        }
      }
  }
  CHECK(instances > 20);
  // The dicyclic group: Z = centre, N = C3, not a direct product.
  PermGroup G = testcorpus::dicyclic12();
  PermGroup Z = center(G);
  PermGroup N = subgroup(G, {Perm::from_cycles("(1,2,3)", 7)});
  REQUIRE(Z.order() == 2);
  for (std::uint32_t p : {2u, 3u})
    for (std::size_t b = 0; b < block_partition(N, p)->size(); ++b) {
      bool inv = true;
      for (const Perm& g : G.generators()) inv = inv && conjugate_block(N, b, g, p) == b;
      if (inv) CHECK(quotient_compat_check(G, N, b, Z, p).holds());
    }
}

TEST_CASE("ramification JSON") {
  PermGroup sl = named::sl2_3();
  auto j = to_json(ramification_group(sl, sylow(sl, 2), 0, 2));
  CHECK(j["order"] == 8);
  CHECK(j["witnesses"].size() >= 1);
}
