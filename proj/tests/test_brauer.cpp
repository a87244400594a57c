#include <algorithm>
#include <map>
#include <set>

#include "bb/brauer.hpp"
#include "bb/classes.hpp"
#include "bb/named_groups.hpp"
#include "corpus.hpp"
#include "doctest.h"

using namespace bb;

namespace {

std::vector<std::uint32_t> primes_of(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (auto p : prime_divisors(n)) out.push_back(static_cast<std::uint32_t>(p));
  return out;
}

std::multiset<std::size_t> degrees(const IbrSet& I) {
  std::multiset<std::size_t> out;
  for (const auto& phi : I.irr) out.insert(phi.degree);
  return out;
}

std::shared_ptr<const SmallField> prime_field(std::uint32_t p) {
  return std::make_shared<SmallField>(GaloisField(p, 1));
}

// Every cyclic submodule of a module over GF(p), by closing the orbit of a
// vector under the generators and addition.  Vectors are coded base p.
std::set<std::set<std::uint32_t>> cyclic_submodules(const FFModule& M) {
  const SmallField& F = *M.field;
  const std::uint32_t p = F.size();
  std::uint32_t total = 1;
  for (std::size_t i = 0; i < M.dim; ++i) total *= p;
  auto decode = [&](std::uint32_t c) {
    FFVec v(M.dim);
    for (auto& x : v) {
      x = F.from_int(c % p);
      c /= p;
    }
    return v;
  };
  auto encode = [&](const FFVec& v) {
    std::uint32_t c = 0;
    for (std::size_t i = M.dim; i-- > 0;) c = c * p + F.to_galois(v[i])[0];
    return c;
  };
  std::set<std::set<std::uint32_t>> out;
  for (std::uint32_t start = 1; start < total; ++start) {
    std::set<std::uint32_t> S{0, start};
    std::vector<std::uint32_t> frontier{start};
    while (!frontier.empty()) {
      auto c = frontier.back();
      frontier.pop_back();
      std::vector<std::uint32_t> next;
      for (const FFMat& g : M.gens) next.push_back(encode(vec_mat(F, decode(c), g)));
      for (auto s : std::vector<std::uint32_t>(S.begin(), S.end())) {
        FFVec a = decode(c), b = decode(s);
        for (std::size_t i = 0; i < M.dim; ++i) a[i] = F.add(a[i], b[i]);
        next.push_back(encode(a));
      }
      for (auto n : next)
        if (S.insert(n).second) frontier.push_back(n);
    }
    out.insert(S);
  }
  return out;
}

}  // namespace

TEST_CASE("p-regular classes") {
  CHECK(p_regular_classes(named::symmetric(3), 3).size() == 2);
  CHECK(p_regular_classes(named::quaternion(), 2) == std::vector<std::size_t>{0});
  PermGroup a5 = named::alternating(5);
  CHECK(p_regular_classes(a5, 7).size() == a5.classes().count());
  CHECK(p_regular_classes(a5, 2).size() == 4);
}

TEST_CASE("field layer") {
  for (auto [p, k] : {std::pair{2u, 4u}, {3u, 2u}, {5u, 1u}, {7u, 1u}}) {
    GaloisField G(p, k);
    SmallField F(G);
    for (std::uint32_t a = 0; a < F.size(); ++a) {
      CHECK(F.from_galois(F.to_galois(a)) == a);
      for (std::uint32_t b = 0; b < F.size(); ++b) {
        CHECK(F.to_galois(F.add(a, b)) == G.add(F.to_galois(a), F.to_galois(b)));
        CHECK(F.to_galois(F.mul(a, b)) == G.mul(F.to_galois(a), F.to_galois(b)));
      }
      if (a) CHECK(F.mul(a, F.inv(a)) == SmallField::one());
    }
  }
  // Characteristic polynomial against the Leibniz expansion on 3×3 matrices.
  SmallField F(GaloisField(5, 1));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    FFMat m(3, 3);
    for (auto& x : m.a) x = static_cast<SmallField::E>(rng() % 5);
    auto cp = charpoly(F, m);
    REQUIRE(cp.size() == 4);
    for (std::uint32_t lam = 0; lam < 5; ++lam) {
      FFMat b = m;
      for (std::size_t i = 0; i < 3; ++i) b(i, i) = F.sub(b(i, i), lam);
      // det(λI - m) = -det(m - λI) in dimension 3.
      auto minor = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return F.sub(F.mul(b(1, i), b(2, j)), F.mul(b(1, k), b(2, l)));
      };
      auto det = F.add(F.sub(F.mul(b(0, 0), minor(1, 2, 2, 1)), F.mul(b(0, 1), minor(0, 2, 2, 0))),
                       F.mul(b(0, 2), minor(0, 1, 1, 0)));
      SmallField::E val = 0;
      for (std::size_t i = cp.size(); i-- > 0;) val = F.add(F.mul(val, lam), cp[i]);
      CHECK(val == F.neg(det));
    }
    if (rank(F, m) == 3) CHECK(mat_mul(F, m, inverse(F, m)) == FFMat::identity(3));
  }
}

TEST_CASE("chop against brute-force submodule lattices") {
  std::mt19937_64 rng(11);
  SUBCASE("S3 on three points over GF(3)") {
    PermGroup G = named::symmetric(3);
    FFModule M = permutation_module(prime_field(3), G);
    auto subs = cyclic_submodules(M);
    std::set<std::size_t> sizes;
    for (const auto& s : subs) sizes.insert(s.size());
    // <111> ⊂ sum-zero plane ⊂ V is the only chain.
    CHECK(sizes == std::set<std::size_t>{3, 9, 27});
    auto f = composition_factors(M, rng);
    CHECK(f.size() == 3);
    for (const auto& x : f) CHECK(x.dim == 1);
  }
  SUBCASE("A5 on five points over GF(2)") {
    PermGroup G = named::alternating(5);
    FFModule M = permutation_module(prime_field(2), G);
    auto subs = cyclic_submodules(M);
    std::set<std::size_t> sizes;
    for (const auto& s : subs) sizes.insert(s.size());
    // <11111>, the even-weight space, and V; the two proper ones meet in 0.
    CHECK(sizes == std::set<std::size_t>{2, 16, 32});
    auto f = composition_factors(M, rng);
    std::multiset<std::size_t> dims;
    for (const auto& x : f) dims.insert(x.dim);
    CHECK(dims == std::multiset<std::size_t>{1, 4});
  }
  SUBCASE("one-dimensional modules are irreducible") {
    PermGroup G = named::symmetric(4);
    FFModule T = trivial_module(prime_field(5), G);
    CHECK_FALSE(find_submodule(T, rng).has_value());
    CHECK(composition_factors(T, rng).size() == 1);
  }
}

TEST_CASE("IBr for named examples") {
  CHECK(degrees(*ibr(named::symmetric(3), 3)) == std::multiset<std::size_t>{1, 1});
  CHECK(degrees(*ibr(named::symmetric(3), 2)) == std::multiset<std::size_t>{1, 2});
  CHECK(degrees(*ibr(named::alternating(5), 2)) == std::multiset<std::size_t>{1, 2, 2, 4});
  PermGroup c3(3, {Perm::from_cycles("(1,2,3)", 3)});
  auto I = ibr(c3, 3);
  REQUIRE(I->size() == 1);
  CHECK(I->irr[0].values == std::vector<Cyclotomic>{Cyclotomic(1)});
  CHECK_THROWS_AS(ibr(named::alternating(5), 2, IbrOptions{1, 256, 10, 0}), IbrOutOfScope);
}

TEST_CASE("IBr equals Irr when p does not divide the order") {
  for (const auto& [name, G] : testcorpus::small_groups()) {
    std::uint32_t p = 5;
    while (G.order() % p == 0) p += 2;
    auto I = ibr(G, p);
    auto T = character_table(G);
    REQUIRE(I->size() == T->size());
    std::set<std::vector<Cyclotomic>> brauer, ordinary;
    for (const auto& phi : I->irr) brauer.insert(phi.values);
    for (const auto& chi : T->irr()) ordinary.insert(chi.values());
    CHECK_MESSAGE(brauer == ordinary, name);
    auto D = decomposition_matrix(G, p);
    for (std::size_t i = 0; i < D.rows(); ++i) {
      std::int64_t row_sum = 0;
      for (auto x : D.entries[i]) row_sum += x;
      CHECK(row_sum == 1);
    }
  }
}

TEST_CASE("decomposition matrices over the corpus") {
  std::vector<std::pair<std::string, PermGroup>> groups = testcorpus::small_groups();
  groups.emplace_back("A5", named::alternating(5));
  groups.emplace_back("S5", named::symmetric(5));
  for (const auto& [name, G] : groups)
    for (auto p : primes_of(G.order())) {
      CAPTURE(name);
      CAPTURE(p);
      auto I = ibr(G, p);
      CHECK(I->size() == p_regular_classes(G, p).size());
      std::set<std::vector<Cyclotomic>> distinct;
      for (const auto& phi : I->irr) {
        distinct.insert(phi.values);
        CHECK(phi.values.front() == Cyclotomic(static_cast<std::int64_t>(phi.degree)));
      }
      CHECK(distinct.size() == I->size());
      auto D = decomposition_matrix(G, p);
      auto T = character_table(G);
      for (std::size_t i = 0; i < D.rows(); ++i) {
        std::int64_t deg = 0;
        for (std::size_t c = 0; c < D.cols(); ++c) {
          CHECK(D.entries[i][c] >= 0);
          deg += D.entries[i][c] * static_cast<std::int64_t>(I->irr[c].degree);
        }
        CHECK(deg == T->degree(i));
      }
      auto B = block_partition(G, p);
      std::size_t covered = 0;
      for (std::size_t b = 0; b < B->size(); ++b) {
        auto in_b = ibr_of_block(G, p, b);
        CHECK_FALSE(in_b.empty());
        covered += in_b.size();
        if ((*B)[b].defect == 0) {
          REQUIRE(in_b.size() == 1);
          const auto& chi = (*T)[(*B)[b].members.front()];
          for (std::size_t t = 0; t < I->classes.size(); ++t) CHECK(I->irr[in_b[0]].values[t] == chi[I->classes[t]]);
        }
      }
      CHECK(covered == I->size());
    }
}

TEST_CASE("IBr per block, named") {
  auto per_block = [](const PermGroup& G, std::uint32_t p) {
    std::map<std::size_t, std::multiset<std::size_t>> out;
    auto I = ibr(G, p);
    for (std::size_t phi = 0; phi < I->size(); ++phi) out[block_of_brauer(G, p, phi)].insert(I->irr[phi].degree);
    return out;
  };
  auto s3 = per_block(named::symmetric(3), 2);
  CHECK(s3.size() == 2);
  std::set<std::multiset<std::size_t>> s3_sets;
  for (const auto& [b, d] : s3) s3_sets.insert(d);
  CHECK(s3_sets == std::set<std::multiset<std::size_t>>{{1}, {2}});

  PermGroup a5 = named::alternating(5);
  auto a5_blocks = per_block(a5, 2);
  auto B = block_partition(a5, 2);
  CHECK(a5_blocks[B->principal()] == std::multiset<std::size_t>{1, 2, 2});
  for (const auto& [b, d] : a5_blocks)
    if ((*B)[b].defect == 0) CHECK(d == std::multiset<std::size_t>{4});
  // The 5-dimensional character reduces to 1 + 2 + 2 at p = 2.
  auto D = decomposition_matrix(a5, 2);
  auto T = character_table(a5);
  for (std::size_t i = 0; i < T->size(); ++i)
    if (T->degree(i) == 5) {
      std::int64_t sum = 0;
      for (auto x : D.entries[i]) sum += x;
      CHECK(sum == 3);
    }
}

TEST_CASE("actions on Brauer characters") {
  for (const auto& [name, G] : testcorpus::small_groups())
    for (auto p : primes_of(G.order())) {
      auto spec = trivial_action_spec(G);
      CHECK(invariant_brauer(spec, p).size() == ibr(G, p)->size());
    }
  auto q = named::q8_c3();
  ActionSpec qs(q.group, q.action);
  CHECK(invariant_brauer(qs, 2) == std::vector<std::size_t>{0});

  auto d = named::d14_c3();
  ActionSpec ds(d.group, d.action);
  auto orb = act_on_brauer(ds, 2);
  CHECK(orb.kind == ObjectKind::ibr);
  for (const auto& o : orb.orbits) CHECK((o.size() == 1 || o.size() == 3));
  CHECK(orb.fixed == std::vector<std::size_t>{0});
  auto count = brauer_count_report(ds, 2);
  CHECK(count.invariant_brauer == 1);

  auto c = named::c7_c3();
  ActionSpec cs(c.group, c.action);
  auto corb = act_on_brauer(cs, 3);
  CHECK(corb.orbits.size() == 3);
  CHECK(corb.fixed.size() == 1);
}

TEST_CASE("Brauer JSON and determinism") {
  PermGroup a = named::alternating(5);
  PermGroup b = named::alternating(5);  // separate object, fresh search
  auto ja = to_json(*ibr(a, 2));
  auto jb = to_json(*ibr(b, 2));
  CHECK(ja.dump() == jb.dump());
  CHECK(ja["ibr"].size() == 4);
  auto jd = to_json(decomposition_matrix(a, 2));
  CHECK(jd["entries"].size() == character_table(a)->size());
}
