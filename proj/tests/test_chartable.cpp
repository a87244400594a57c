#include <algorithm>
#include <random>

#include "bb/chartable.hpp"
#include "bb/classes.hpp"
#include "bb/named_groups.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bb;

namespace {

std::vector<std::int64_t> sorted_degrees(const CharacterTable& T) {
  auto d = T.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

// Both orthogonality relations, degree sum and divisibility; exact.
void check_table(const PermGroup& G) {
  auto T = character_table(G);
  const auto& K = G.classes();
  REQUIRE(T->size() == K.count());
  std::int64_t sq = 0;
  for (std::size_t i = 0; i < T->size(); ++i) {
    sq += T->degree(i) * T->degree(i);
    CHECK(static_cast<std::int64_t>(G.order()) % T->degree(i) == 0);
    for (std::size_t j = 0; j < T->size(); ++j)
      CHECK(inner_product((*T)[i], (*T)[j]) == Cyclotomic(i == j ? 1 : 0));
    for (const auto& v : (*T)[i].values()) CHECK(v.is_algebraic_integer());
  }
  CHECK(sq == static_cast<std::int64_t>(G.order()));
  for (std::size_t a = 0; a < K.count(); ++a)
    for (std::size_t b = 0; b < K.count(); ++b) {
      Cyclotomic s;
      for (const auto& chi : T->irr()) s += chi[a] * chi[b].conj();
      CHECK(s == Cyclotomic(a == b ? static_cast<std::int64_t>(K.centralizer_order(a)) : 0));
    }
}

// Central characters satisfy ω(C_j)ω(C_k) = Σ_l a_jkl ω(C_l) with the
// structure constants counted over the brute-force element set.
void check_class_algebra(const PermGroup& G) {
  auto T = character_table(G);
  auto elts = oracle::closure(G.generators(), G.degree());
  const auto& K = G.classes();
  const std::size_t r = K.count();
  std::vector<std::vector<std::vector<std::int64_t>>> a(r, std::vector<std::vector<std::int64_t>>(r, std::vector<std::int64_t>(r)));
  for (std::size_t l = 0; l < r; ++l)
    for (const auto& x : elts) {
      Perm y = x.inverse() * K.representative(l);
      ++a[K.class_of(x)][K.class_of(y)][l];
    }
  for (const auto& chi : T->irr()) {
    std::vector<Cyclotomic> w(r);
    for (std::size_t j = 0; j < r; ++j) w[j] = chi[j] * Rational(static_cast<std::int64_t>(K.size(j)), chi.degree());
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        Cyclotomic rhs;
        for (std::size_t l = 0; l < r; ++l)
          if (a[j][k][l]) rhs += w[l] * Rational(a[j][k][l]);
        CHECK(w[j] * w[k] == rhs);
      }
  }
}

// (1/|H|) Σ_{x ∈ G} θ°(x g x^-1), straight from the definition.
std::vector<Cyclotomic> brute_induce(const ClassFunction& theta, const PermGroup& G) {
  const PermGroup& H = theta.group();
  auto elts = oracle::closure(G.generators(), G.degree());
  std::vector<Cyclotomic> out;
  for (std::size_t c = 0; c < G.classes().count(); ++c) {
    Cyclotomic s;
    const Perm& g = G.classes().representative(c);
    for (const auto& x : elts) {
      Perm y = g.conjugate_by(x);
      if (H.contains(y)) s += theta.at(y);
    }
    out.push_back(s / Rational(static_cast<std::int64_t>(H.order())));
  }
  return out;
}

std::size_t index_with_degree(const CharacterTable& T, std::int64_t d, std::size_t skip = 0) {
  for (std::size_t i = 0; i < T.size(); ++i)
    if (T.degree(i) == d && skip-- == 0) return i;
  return T.size();
}

}  // namespace

TEST_CASE("small tables") {
  PermGroup c2 = named::cyclic(2);
  auto T = character_table(c2);
  CHECK(sorted_degrees(*T) == std::vector<std::int64_t>{1, 1});
  CHECK((*T)[1][1] == Cyclotomic(-1));

  PermGroup s3 = named::symmetric(3);
  auto T3 = character_table(s3);
  CHECK(sorted_degrees(*T3) == std::vector<std::int64_t>{1, 1, 2});
  const auto& chi2 = (*T3)[2];
  CHECK(chi2.values() == std::vector<Cyclotomic>{2, 0, -1});
  CHECK((*T3)[0] == ClassFunction::constant(s3, 1));

  CHECK(sorted_degrees(*character_table(named::alternating(5))) == std::vector<std::int64_t>{1, 3, 3, 4, 5});
  CHECK(sorted_degrees(*character_table(named::symmetric(4))) == std::vector<std::int64_t>{1, 1, 2, 3, 3});
  CHECK(sorted_degrees(*character_table(named::alternating(4))) == std::vector<std::int64_t>{1, 1, 1, 3});
  CHECK(sorted_degrees(*character_table(named::sl2_3())) == std::vector<std::int64_t>{1, 1, 1, 2, 2, 2, 3});
  CHECK(sorted_degrees(*character_table(named::quaternion())) == std::vector<std::int64_t>{1, 1, 1, 1, 2});
  // The table is memoized on the group object.
  CHECK(character_table(s3).get() == T3.get());
}

TEST_CASE("orthogonality and class algebra") {
  for (const auto& G : {named::symmetric(3), named::symmetric(4), named::alternating(4), named::alternating(5),
                        named::sl2_3(), named::quaternion(), named::frobenius21(), named::heisenberg3(),
                        named::dihedral(7), named::symmetric(5), named::elementary_abelian2(3)}) {
    check_table(G);
    check_class_algebra(G);
  }
}

TEST_CASE("Galois action permutes rows and matches power maps") {
  for (const auto& G : {named::frobenius21(), named::heisenberg3(), named::alternating(5), named::sl2_3()}) {
    auto T = character_table(G);
    const auto& K = G.classes();
    const auto e = static_cast<std::int64_t>(G.exponent());
    for (std::int64_t k = 2; k < e; ++k) {
      if (std::gcd(k, e) != 1) continue;
      for (const auto& chi : T->irr()) {
        CHECK(T->index_of(chi.galois(k)).has_value());
        for (std::size_t c = 0; c < K.count(); ++c) CHECK(chi[K.power_class(c, k)] == chi[c].galois(k));
      }
    }
  }
}

TEST_CASE("inner products, restriction, induction") {
  PermGroup s3 = named::symmetric(3);
  auto T = character_table(s3);
  ClassFunction reg = ClassFunction::regular(s3);
  for (std::size_t i = 0; i < T->size(); ++i) CHECK(inner_product(reg, (*T)[i]) == Cyclotomic(T->degree(i)));

  PermGroup a3 = subgroup(s3, {Perm::from_cycles("(1,2,3)", 3)});
  auto TA = character_table(a3);
  CHECK(restrict((*T)[0], a3) == ClassFunction::constant(a3, 1));
  CHECK(induce((*TA)[0], s3)[0] == Cyclotomic(2));
  ClassFunction omega = (*TA)[1];
  ClassFunction ind = induce(omega, s3);
  CHECK(ind == (*T)[2]);
  CHECK(inner_product(ind, (*T)[2]) == Cyclotomic(1));
  CHECK(ind.values() == brute_induce(omega, s3));
  CHECK_THROWS_AS(inner_product(omega, (*T)[0]), GroupMismatch);
}

TEST_CASE("Frobenius reciprocity on random triples") {
  std::mt19937_64 rng(11);
  std::vector<std::pair<PermGroup, PermGroup>> pairs;
  {
    PermGroup a5 = named::alternating(5);
    pairs.emplace_back(a5, sylow(a5, 2));
    pairs.emplace_back(a5, normalizer(a5, sylow(a5, 5)));
    PermGroup sl = named::sl2_3();
    pairs.emplace_back(sl, sylow(sl, 2));
    pairs.emplace_back(sl, sylow(sl, 3));
    PermGroup s4 = named::symmetric(4);
    pairs.emplace_back(s4, sylow(s4, 2));
    pairs.emplace_back(s4, subgroup(s4, named::alternating(4).generators()));
  }
  for (const auto& [G, H] : pairs) {
    auto TG = character_table(G);
    auto TH = character_table(H);
    for (int trial = 0; trial < 100; ++trial) {
      const auto& theta = (*TH)[rng() % TH->size()];
      const auto& chi = (*TG)[rng() % TG->size()];
      CHECK(inner_product(induce(theta, G), chi) == inner_product(theta, restrict(chi, H)));
    }
    for (const auto& theta : TH->irr()) CHECK(induce(theta, G).values() == brute_induce(theta, G));
  }
}

TEST_CASE("irr_over, find_extension, Gallagher") {
  PermGroup sl = named::sl2_3();
  PermGroup q8 = sylow(sl, 2);
  auto TQ = character_table(q8);
  const std::size_t t2 = index_with_degree(*TQ, 2);
  const ClassFunction& theta = (*TQ)[t2];
  auto over = irr_over(sl, q8, theta);
  auto T = character_table(sl);
  CHECK(over.size() == 3);
  for (auto i : over) CHECK(T->degree(i) == 2);

  auto ext = find_extension(theta, sl);
  REQUIRE(ext.has_value());
  CHECK(restrict(*ext, q8) == theta);
  auto quo = quotient(sl, q8);
  auto bij = gallagher_bijection(*ext, q8, quo);
  CHECK(bij.size() == character_table(quo.group)->size());
  std::vector<std::size_t> sorted = bij;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  CHECK(sorted == over);
  // Trivial η gives θ̃ itself.
  CHECK(gallagher_product(*ext, ClassFunction::constant(sl, 1)) == *ext);

  // Trivial θ extends to the trivial character.
  auto one = find_extension(ClassFunction::constant(q8, 1), sl);
  REQUIRE(one.has_value());
  CHECK(*one == (*T)[0]);

  // Faithful linear character of Z(Q8): the only character over it has degree 2.
  PermGroup Q = named::quaternion();
  PermGroup Z = center(Q);
  auto TZ = character_table(Z);
  const ClassFunction& faithful = (*TZ)[1];
  auto overZ = irr_over(Q, Z, faithful);
  REQUIRE(overZ.size() == 1);
  CHECK(character_table(Q)->degree(overZ[0]) == 2);
  CHECK_FALSE(find_extension(faithful, Q).has_value());

  // A non-invariant character: the sign-like linear characters of V4 in A4.
  PermGroup a4 = named::alternating(4);
  PermGroup v4 = sylow(a4, 2);
  CHECK_THROWS_AS(find_extension((*character_table(v4))[1], a4), NotInvariant);
}

TEST_CASE("Gallagher bijection on every extendible invariant character") {
  std::vector<std::pair<PermGroup, std::vector<PermGroup>>> cases;
  {
    PermGroup sl = named::sl2_3();
    cases.push_back({sl, {sylow(sl, 2), center(sl)}});
    PermGroup s4 = named::symmetric(4);
    PermGroup a4 = subgroup(s4, named::alternating(4).generators());
    cases.push_back({s4, {a4, commutator_subgroup(a4)}});
    PermGroup a5 = named::alternating(5);
    cases.push_back({a5, {a5}});
  }
  for (const auto& [G, normals] : cases) {
    for (const auto& N : normals) {
      auto q = quotient(G, N);
      for (const auto& theta : character_table(N)->irr()) {
        bool invariant = true;
        for (const Perm& g : G.generators()) invariant = invariant && conjugate(theta, g) == theta;
        if (!invariant) continue;
        auto ext = find_extension(theta, G);
        if (!ext) continue;
        auto bij = gallagher_bijection(*ext, N, q);
        std::sort(bij.begin(), bij.end());
        CHECK(std::adjacent_find(bij.begin(), bij.end()) == bij.end());
        CHECK(bij == irr_over(G, N, theta));
      }
    }
  }
}

TEST_CASE("dot_with_central") {
  // C4 ∘ Q8: K = Q8, Z = C4 central, K ∩ Z = Z(Q8).
  PermGroup Q = named::quaternion();
  PermGroup c4 = named::cyclic(4);
  Perm zq = center(Q).generators()[0];
  auto cp = central_product(Q, c4, {zq}, {c4.generators()[0].pow(2)});
  const PermGroup& G = cp.group;
  PermGroup K = cp.embed_first.image();
  PermGroup Zc = cp.embed_second.image();
  REQUIRE(G.order() == 16);
  auto TK = character_table(K);
  auto TZ = character_table(Zc);
  const ClassFunction& chi0 = (*TK)[index_with_degree(*TK, 2)];
  std::size_t found = 0;
  for (const auto& nu : TZ->irr()) {
    bool compatible = true;
    PermGroup KZ = intersection(K, Zc);
    for (const Perm& z : KZ.elements().all()) compatible = compatible && chi0.at(z) == chi0[0] * nu.at(z);
    if (!compatible) {
      CHECK_THROWS_AS(dot_with_central(chi0, nu, G), IncompatibleCentral);
      continue;
    }
    ++found;
    ClassFunction chi = dot_with_central(chi0, nu, G);
    // Exhaustive: exactly one irreducible of G lies over both.
    auto T = character_table(G);
    std::size_t both = 0;
    for (std::size_t i = 0; i < T->size(); ++i) {
      bool over0 = !inner_product(restrict((*T)[i], K), chi0).is_zero();
      bool over1 = !inner_product(restrict((*T)[i], Zc), nu).is_zero();
      if (over0 && over1) {
        ++both;
        CHECK((*T)[i] == chi);
      }
    }
    CHECK(both == 1);
  }
  CHECK(found == 2);

  // Z ≤ K: ν the restriction of χ₀'s central character gives χ₀ back.
  PermGroup ZQ = center(Q);
  auto TQ = character_table(Q);
  const ClassFunction& q2 = (*TQ)[index_with_degree(*TQ, 2)];
  for (const auto& nu : character_table(ZQ)->irr())
    if (nu.at(zq) == Cyclotomic(-1)) CHECK(dot_with_central(q2, nu, Q) == q2);
  // Non-central Z is rejected.
  PermGroup s3 = named::symmetric(3);
  PermGroup a3 = subgroup(s3, {Perm::from_cycles("(1,2,3)", 3)});
  PermGroup t = subgroup(s3, {Perm::from_cycles("(1,2)", 3)});
  CHECK_THROWS_AS(dot_with_central((*character_table(a3))[0], (*character_table(t))[0], s3), IncompatibleCentral);
}

TEST_CASE("JSON export") {
  auto T = character_table(named::frobenius21());
  auto j = to_json(*T);
  CHECK(j["characters"].size() == 5);
  CHECK(j["classes"].size() == 5);
  CHECK(j["characters"][0]["values"][0]["conductor"] == 1);
  CHECK(to_json(*T).dump() == j.dump());
  auto v = to_json(Cyclotomic::root_of_unity(7, 1) + Cyclotomic::root_of_unity(7, 2) + Cyclotomic::root_of_unity(7, 4));
  CHECK(v["conductor"] == 7);
  CHECK(v["coefficients"].size() == 6);
}
