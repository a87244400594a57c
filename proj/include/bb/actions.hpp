#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bb/blocks.hpp"
#include "bb/chartable.hpp"
#include "bb/group_ops.hpp"
#include "json.hpp"

namespace bb {

struct NotCoprime : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A group A acting on G by automorphisms.  A is realized as a permutation
/// group on the element indices of G, so a ∈ A sends g to
/// G.elements()[a[index(g)]] and products compose left to right.
class ActionSpec {
public:
  ActionSpec(PermGroup G, AutomorphismMaps maps);

  const PermGroup& group() const { return group_; }
  const AutomorphismMaps& maps() const { return maps_; }
  const PermGroup& acting_group() const { return A_; }
  std::uint64_t acting_order() const { return A_.order(); }
  bool coprime() const { return coprime_; }

  /// g^a.
  Perm apply(const Perm& a, const Perm& g) const;
  /// Image of a subgroup of G.
  PermGroup apply(const Perm& a, const PermGroup& H) const;
  /// Class of (rep_c)^a.
  std::size_t class_image(const Perm& a, std::size_t c) const;
  /// Permutation of G's classes induced by a.
  std::vector<std::size_t> class_permutation(const Perm& a) const;

private:
  PermGroup group_;
  AutomorphismMaps maps_;
  PermGroup A_;
  bool coprime_;
};

ActionSpec trivial_action_spec(const PermGroup& G);

enum class ObjectKind { classes, irr, blocks, ibr };
std::string to_string(ObjectKind k);

struct OrbitData {
  ObjectKind kind;
  std::vector<std::vector<std::size_t>> orbits;  // each sorted; ordered by least member
  std::vector<std::size_t> fixed;
};

/// Orbits of a right action of A on {0, ..., n-1} given as one index map per
/// generator of A.
OrbitData orbits_from_generators(ObjectKind kind, std::size_t n,
                                 const std::vector<std::vector<std::size_t>>& generator_maps);

bool check_coprime(const ActionSpec& spec);

/// χ^a(g) = χ(g^{a^-1}).
ClassFunction act(const ActionSpec& spec, const ClassFunction& chi, const Perm& a);
/// Index permutation of Irr(G) induced by a.
std::vector<std::size_t> character_permutation(const ActionSpec& spec, const Perm& a);
/// Index permutation of Bl(G) at p induced by a; throws std::logic_error if
/// the characters of a block are scattered over several image blocks.
std::vector<std::size_t> block_permutation(const ActionSpec& spec, std::uint32_t p, const Perm& a);

OrbitData act_on_classes(const ActionSpec& spec);
OrbitData act_on_characters(const ActionSpec& spec);
OrbitData act_on_blocks(const ActionSpec& spec, std::uint32_t p);

std::vector<std::size_t> invariant_characters(const ActionSpec& spec);
std::vector<std::size_t> invariant_blocks(const ActionSpec& spec, std::uint32_t p);

struct GlaubermanCount {
  std::size_t invariant_characters = 0;
  std::size_t fixed_classes = 0;
  bool holds() const { return invariant_characters == fixed_classes; }
};
/// |Irr_A(G)| against the number of A-fixed classes.  Throws NotCoprime.
GlaubermanCount glauberman_count_check(const ActionSpec& spec);

nlohmann::json to_json(const OrbitData& orbits);

}  // namespace bb
