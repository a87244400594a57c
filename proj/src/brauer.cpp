#include "bb/brauer.hpp"

#include <algorithm>
#include <sstream>

#include "bb/classes.hpp"

namespace bb {

namespace {

std::shared_ptr<const SmallField> small_field(const PermGroup& G, std::uint32_t p) {
  return std::static_pointer_cast<const SmallField>(G.memo("small_field:" + std::to_string(p), [&] {
    return std::static_pointer_cast<const void>(std::make_shared<SmallField>(modular_reduction(G, p)->field()));
  }));
}

std::string options_key(const IbrOptions& o) {
  std::ostringstream s;
  s << o.seed << ':' << o.max_dimension << ':' << o.max_group_order << ':' << o.budget_seconds;
  return s.str();
}

bool is_trivial(const BrauerCharacter& phi) {
  return std::all_of(phi.values.begin(), phi.values.end(), [](const Cyclotomic& v) { return v == Cyclotomic(1); });
}

}  // namespace

std::vector<std::size_t> p_regular_classes(const PermGroup& G, std::uint32_t p) {
  const auto& K = G.classes();
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < K.count(); ++c)
    if (K.element_order(c) % p != 0) out.push_back(c);
  return out;
}

std::vector<Constituent> chop(const PermGroup& G, std::uint32_t p, const FFModule& M, std::mt19937_64& rng,
                              const MeatAxeOptions& opts) {
  const auto classes = p_regular_classes(G, p);
  const std::uint64_t m = modular_reduction(G, p)->p_prime_exponent();
  std::vector<Constituent> out;
  for (auto& f : composition_factors(M, rng, opts)) {
    auto values = brauer_character(G, f, classes, m);
    auto it = std::find_if(out.begin(), out.end(), [&](const Constituent& c) { return c.character.values == values; });
    if (it != out.end()) {
      ++it->multiplicity;
      continue;
    }
    std::size_t d = f.dim;
    out.push_back({BrauerCharacter{std::move(values), d, std::move(f)}, 1});
  }
  return out;
}

std::shared_ptr<const IbrSet> ibr(const PermGroup& G, std::uint32_t p, const IbrOptions& opts) {
  if (G.order() > opts.max_group_order)
    throw IbrOutOfScope("ibr: |G| = " + std::to_string(G.order()) + " exceeds the bound " +
                        std::to_string(opts.max_group_order));
  return std::static_pointer_cast<const IbrSet>(G.memo("ibr:" + std::to_string(p) + ":" + options_key(opts), [&] {
    auto F = small_field(G, p);
    auto out = std::make_shared<IbrSet>();
    out->group = G;
    out->prime = p;
    out->classes = p_regular_classes(G, p);
    const std::size_t target = out->classes.size();
    std::mt19937_64 rng(opts.seed);
    SearchOptions so;
    so.max_dimension = opts.max_dimension;
    so.budget_seconds = opts.budget_seconds;
    auto res = search_irreducibles(G, F, modular_reduction(G, p)->p_prime_exponent(), out->classes, target, {}, rng, so);
    out->transcript = std::move(res.transcript);
    std::vector<BrauerCharacter> found;
    for (auto& f : res.found) {
      std::size_t d = f.module.dim;
      found.push_back({std::move(f.values), d, std::move(f.module)});
    }
    if (found.size() != target)
      throw SearchIncomplete("ibr: found " + std::to_string(found.size()) + " of " + std::to_string(target) +
                             " irreducible Brauer characters at p = " + std::to_string(p));

    std::stable_sort(found.begin(), found.end(), [](const BrauerCharacter& a, const BrauerCharacter& b) {
      bool ta = is_trivial(a), tb = is_trivial(b);
      if (ta != tb) return ta;
      if (a.degree != b.degree) return a.degree < b.degree;
      return a.values < b.values;
    });
    out->irr = std::move(found);
    return std::static_pointer_cast<const void>(out);
  }));
}

DecompositionMatrix decomposition_matrix(const PermGroup& G, std::uint32_t p, const IbrOptions& opts) {
  auto I = ibr(G, p, opts);
  auto T = character_table(G);
  return *std::static_pointer_cast<const DecompositionMatrix>(
      G.memo("decomposition:" + std::to_string(p) + ":" + options_key(opts), [&] {
        const auto ambient = static_cast<std::uint32_t>(G.exponent());
        auto coords = [&](auto value_at) {
          std::vector<Rational> v;
          for (std::size_t t = 0; t < I->classes.size(); ++t) {
            auto c = value_at(t).reduced_in(ambient);
            v.insert(v.end(), c.begin(), c.end());
          }
          return v;
        };
        const std::size_t r = I->size(), n = T->size();
        std::vector<std::vector<Rational>> phi;
        for (const auto& b : I->irr) phi.push_back(coords([&](std::size_t t) { return b.values[t]; }));
        const std::size_t L = phi.front().size();
        // Augmented system Φᵀ x = χ° for all χ at once.
        std::vector<std::vector<Rational>> A(L, std::vector<Rational>(r + n));
        for (std::size_t e = 0; e < L; ++e) {
          for (std::size_t j = 0; j < r; ++j) A[e][j] = phi[j][e];
        }
        for (std::size_t i = 0; i < n; ++i) {
          auto v = coords([&](std::size_t t) { return (*T)[i][I->classes[t]]; });
          for (std::size_t e = 0; e < L; ++e) A[e][r + i] = v[e];
        }
        std::size_t row = 0;
        std::vector<std::size_t> pivot_row(r);
        for (std::size_t c = 0; c < r; ++c) {
          std::size_t s = row;
          while (s < L && A[s][c].is_zero()) ++s;
          if (s == L) throw NonIntegralDecomposition("decomposition_matrix: Brauer characters are dependent");
          std::swap(A[s], A[row]);
          Rational inv = Rational(1) / A[row][c];
          for (auto& x : A[row]) x *= inv;
          for (std::size_t e = 0; e < L; ++e) {
            if (e == row || A[e][c].is_zero()) continue;
            Rational f = A[e][c];
            for (std::size_t j = c; j < r + n; ++j) A[e][j] -= f * A[row][j];
          }
          pivot_row[c] = row++;
        }
        for (std::size_t e = row; e < L; ++e)
          for (std::size_t i = 0; i < n; ++i)
            if (!A[e][r + i].is_zero()) throw NonIntegralDecomposition("decomposition_matrix: inconsistent system");
        auto out = std::make_shared<DecompositionMatrix>();
        out->prime = p;
        out->entries.assign(n, std::vector<std::int64_t>(r, 0));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t c = 0; c < r; ++c) {
            const Rational& x = A[pivot_row[c]][r + i];
            if (!x.is_integer() || x.num() < 0)
              throw NonIntegralDecomposition("decomposition_matrix: entry is not a nonnegative integer");
            out->entries[i][c] = x.num();
          }
        for (std::size_t c = 0; c < r; ++c) {
          bool nonzero = false;
          for (std::size_t i = 0; i < n; ++i) nonzero = nonzero || out->entries[i][c] != 0;
          if (!nonzero) throw NonIntegralDecomposition("decomposition_matrix: zero column");
        }
        return std::static_pointer_cast<const void>(out);
      }));
}

std::size_t block_of_brauer(const PermGroup& G, std::uint32_t p, std::size_t phi, const IbrOptions& opts) {
  auto D = decomposition_matrix(G, p, opts);
  auto B = block_partition(G, p);
  std::optional<std::size_t> block;
  for (std::size_t i = 0; i < D.rows(); ++i) {
    if (D.entries[i][phi] == 0) continue;
    std::size_t b = B->block_of(i);
    if (block && *block != b)
      throw BlockInconsistency("block_of_brauer: constituents of φ" + std::to_string(phi) + " span several blocks");
    block = b;
  }
  if (!block) throw BlockInconsistency("block_of_brauer: empty column");
  return *block;
}

std::vector<std::size_t> ibr_of_block(const PermGroup& G, std::uint32_t p, std::size_t block, const IbrOptions& opts) {
  std::vector<std::size_t> out;
  for (std::size_t phi = 0; phi < ibr(G, p, opts)->size(); ++phi)
    if (block_of_brauer(G, p, phi, opts) == block) out.push_back(phi);
  return out;
}

std::vector<std::size_t> brauer_permutation(const ActionSpec& spec, std::uint32_t p, const Perm& a,
                                            const IbrOptions& opts) {
  auto I = ibr(spec.group(), p, opts);
  Perm ai = a.inverse();
  std::vector<std::size_t> where(spec.group().classes().count(), 0);
  for (std::size_t t = 0; t < I->classes.size(); ++t) where[I->classes[t]] = t;
  std::vector<std::size_t> out;
  for (const auto& phi : I->irr) {
    std::vector<Cyclotomic> image;
    for (auto c : I->classes) image.push_back(phi.values[where[spec.class_image(ai, c)]]);
    auto it = std::find_if(I->irr.begin(), I->irr.end(), [&](const BrauerCharacter& b) { return b.values == image; });
    if (it == I->irr.end()) throw std::logic_error("image of an irreducible Brauer character is not irreducible");
    out.push_back(static_cast<std::size_t>(it - I->irr.begin()));
  }
  return out;
}

OrbitData act_on_brauer(const ActionSpec& spec, std::uint32_t p, const IbrOptions& opts) {
  std::vector<std::vector<std::size_t>> maps;
  for (const Perm& a : spec.acting_group().generators()) maps.push_back(brauer_permutation(spec, p, a, opts));
  return orbits_from_generators(ObjectKind::ibr, ibr(spec.group(), p, opts)->size(), maps);
}

std::vector<std::size_t> invariant_brauer(const ActionSpec& spec, std::uint32_t p, const IbrOptions& opts) {
  return act_on_brauer(spec, p, opts).fixed;
}

BrauerCount brauer_count_report(const ActionSpec& spec, std::uint32_t p, const IbrOptions& opts) {
  BrauerCount out;
  out.invariant_brauer = invariant_brauer(spec, p, opts).size();
  auto classes = act_on_classes(spec);
  for (auto c : classes.fixed)
    if (spec.group().classes().element_order(c) % p != 0) ++out.fixed_regular_classes;
  return out;
}

nlohmann::json to_json(const IbrSet& s) {
  nlohmann::json chars = nlohmann::json::array();
  for (const auto& phi : s.irr) {
    std::vector<std::string> values;
    for (const auto& v : phi.values) values.push_back(v.to_string());
    chars.push_back({{"degree", phi.degree}, {"values", values}});
  }
  return {{"prime", s.prime}, {"classes", s.classes}, {"ibr", chars}, {"transcript", s.transcript}};
}

nlohmann::json to_json(const DecompositionMatrix& d) { return {{"prime", d.prime}, {"entries", d.entries}}; }

}  // namespace bb
