#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "bb/actions.hpp"
#include "bb/blocks.hpp"
#include "bb/meataxe.hpp"
#include "json.hpp"

namespace bb {

struct SearchIncomplete : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IbrOutOfScope : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonIntegralDecomposition : std::logic_error {
  using std::logic_error::logic_error;
};
struct BlockInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

/// Classes of elements of order prime to p, in class order.
std::vector<std::size_t> p_regular_classes(const PermGroup& G, std::uint32_t p);

struct BrauerCharacter {
  std::vector<Cyclotomic> values;  // one per p-regular class
  std::size_t degree = 0;
  FFModule module;
};

/// An irreducible constituent of a module together with how often it occurs.
struct Constituent {
  BrauerCharacter character;
  std::size_t multiplicity = 0;
};

/// Composition factors of M (a module for G over the field of
/// modular_reduction(G, p)), grouped by Brauer character and ordered by
/// first appearance.
std::vector<Constituent> chop(const PermGroup& G, std::uint32_t p, const FFModule& M, std::mt19937_64& rng,
                              const MeatAxeOptions& opts = {});

struct IbrOptions {
  std::uint64_t seed = 1;
  std::size_t max_dimension = 256;
  std::uint64_t max_group_order = 2000;
  double budget_seconds = 0;  // 0: unlimited
};

struct IbrSet {
  PermGroup group;
  std::uint32_t prime = 0;
  std::vector<std::size_t> classes;       // p-regular classes
  std::vector<BrauerCharacter> irr;       // trivial first, then by degree and values
  std::vector<std::string> transcript;

  std::size_t size() const { return irr.size(); }
  const BrauerCharacter& operator[](std::size_t i) const { return irr[i]; }
};

/// IBr(G) at p over the field of modular_reduction(G, p).  Sources are the
/// trivial module, the natural permutation module and tensor products of
/// constituents found so far, smallest first.  Memoized per (p, options).
/// Throws IbrOutOfScope when |G| exceeds the bound and SearchIncomplete
/// (with the partial count) when the sources or the budget run out.
std::shared_ptr<const IbrSet> ibr(const PermGroup& G, std::uint32_t p, const IbrOptions& opts = {});

struct DecompositionMatrix {
  std::uint32_t prime = 0;
  std::vector<std::vector<std::int64_t>> entries;  // Irr(G) × IBr(G)
  std::size_t rows() const { return entries.size(); }
  std::size_t cols() const { return entries.empty() ? 0 : entries.front().size(); }
};

/// Exact solution of χ° = Σ d_{χφ} φ.  Throws NonIntegralDecomposition if
/// an entry is not a nonnegative integer, a system is inconsistent, or a
/// column vanishes.
DecompositionMatrix decomposition_matrix(const PermGroup& G, std::uint32_t p, const IbrOptions& opts = {});

/// Block containing every χ with d_{χφ} ≠ 0; BlockInconsistency otherwise.
std::size_t block_of_brauer(const PermGroup& G, std::uint32_t p, std::size_t phi, const IbrOptions& opts = {});
std::vector<std::size_t> ibr_of_block(const PermGroup& G, std::uint32_t p, std::size_t block,
                                      const IbrOptions& opts = {});

/// φ^a(g) = φ(g^{a^-1}).
std::vector<std::size_t> brauer_permutation(const ActionSpec& spec, std::uint32_t p, const Perm& a,
                                            const IbrOptions& opts = {});
OrbitData act_on_brauer(const ActionSpec& spec, std::uint32_t p, const IbrOptions& opts = {});
std::vector<std::size_t> invariant_brauer(const ActionSpec& spec, std::uint32_t p, const IbrOptions& opts = {});

/// |IBr_A(G)| against the number of A-fixed p-regular classes.  Reported
/// only: equality is the open coprime-action conjecture.
struct BrauerCount {
  std::size_t invariant_brauer = 0;
  std::size_t fixed_regular_classes = 0;
};
BrauerCount brauer_count_report(const ActionSpec& spec, std::uint32_t p, const IbrOptions& opts = {});

nlohmann::json to_json(const IbrSet& ibr);
nlohmann::json to_json(const DecompositionMatrix& d);

}  // namespace bb
