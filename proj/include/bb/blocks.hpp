#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bb/chartable.hpp"
#include "bb/galois_field.hpp"
#include "json.hpp"

namespace bb {

struct DefectClassNotFound : std::logic_error {
  using std::logic_error::logic_error;
};
struct KernelViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NoCanonicalCharacter : std::logic_error {
  using std::logic_error::logic_error;
};

using FieldVector = std::vector<GaloisField::Elem>;

/// λ_χ(K⁺) = |K| χ(g_K) / χ(1) for every class K.
std::vector<Cyclotomic> central_character(const ClassFunction& chi);

/// λ_χ reduced through `red`, whose exponent must be a multiple of exp(G).
FieldVector lambda_star(const ClassFunction& chi, const ModularReduction& red);

/// Reduction map for (G, p), memoized on the group object.
std::shared_ptr<const ModularReduction> modular_reduction(const PermGroup& G, std::uint32_t p);

struct Block {
  std::vector<std::size_t> members;  // indices into the character table
  FieldVector lambda_star;           // one entry per class
  int defect = 0;
  PermGroup defect_group;            // a representative
  std::size_t defect_class = 0;      // the class it was read off from
};

class BlockSet {
public:
  BlockSet(PermGroup G, std::uint32_t p);

  const PermGroup& group() const { return group_; }
  std::uint32_t prime() const { return p_; }
  std::size_t size() const { return blocks_.size(); }
  const Block& operator[](std::size_t b) const { return blocks_[b]; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t block_of(std::size_t chi) const { return block_of_[chi]; }
  /// Block with the given λ* vector, if any.
  std::optional<std::size_t> find(const FieldVector& lambda_star) const;
  /// Block containing the trivial character.
  std::size_t principal() const { return block_of_[0]; }
  const ModularReduction& reduction() const { return *red_; }
  std::shared_ptr<const CharacterTable> table() const { return table_; }

private:
  PermGroup group_;
  std::uint32_t p_;
  std::shared_ptr<const CharacterTable> table_;
  std::shared_ptr<const ModularReduction> red_;
  std::vector<Block> blocks_;
  std::vector<std::size_t> block_of_;
};

/// Bl(G) at p, memoized on the group object.  Blocks are ordered by their
/// least member.
std::shared_ptr<const BlockSet> block_partition(const PermGroup& G, std::uint32_t p);

/// Index of b^G in block_partition(G), or nullopt when the induced central
/// function is not a block's λ*.
std::optional<std::size_t> block_induction(const PermGroup& H, std::size_t b, const PermGroup& G, std::uint32_t p);

/// Does B ∈ Bl(G) cover b ∈ Bl(N)?
bool covers(const PermGroup& G, std::size_t B, const PermGroup& N, std::size_t b, std::uint32_t p);
/// Bl(G | b).
std::vector<std::size_t> blocks_covering(const PermGroup& G, const PermGroup& N, std::size_t b, std::uint32_t p);

/// The block of G/Z holding the deflations of those χ ∈ B with ker q in
/// ker χ.  Throws KernelViolation if there are none; unique when ker q is a
/// p-group, otherwise a split is reported as a logic_error.
std::size_t dominated_block(const PermGroup& G, std::size_t B, const Quotient& q, std::uint32_t p);

/// Character of G/Z whose inflation is chi, for Z = ker q in ker chi.
ClassFunction deflate(const ClassFunction& chi, const Quotient& q);

struct CanonicalCharacters {
  PermGroup subgroup;                 // D·C_N(D)
  std::vector<std::size_t> indices;   // into the table of `subgroup`
  std::size_t representative() const { return indices.front(); }
};

/// The characters η of D·C_N(D) with D ≤ ker η and bl(η)^N = b.
CanonicalCharacters canonical_characters(const PermGroup& N, std::size_t b, const PermGroup& D, std::uint32_t p);

/// Index in Bl(N) of b^g.
std::size_t conjugate_block(const PermGroup& N, std::size_t b, const Perm& g, std::uint32_t p);
/// Stabilizer G_b of b ∈ Bl(N), N ⊴ G.
PermGroup block_stabilizer(const PermGroup& G, const PermGroup& N, std::size_t b, std::uint32_t p);
/// The G-orbit of b, in order of discovery from b.
std::vector<std::size_t> block_orbit(const PermGroup& G, const PermGroup& N, std::size_t b, std::uint32_t p);

/// Block of NND = N_N(D) with defect group D inducing to b, where D is the
/// recorded defect group of b.
std::size_t brauer_correspondent(const PermGroup& N, std::size_t b, const PermGroup& NND, std::uint32_t p);

struct HarrisKnorrCount {
  std::size_t over_b = 0;        // |Bl(G | b)|
  std::size_t over_tilde = 0;    // |Bl(N_G(D) | b̃)|
  bool holds() const { return over_b == over_tilde; }
};
HarrisKnorrCount harris_knorr_check(const PermGroup& G, const PermGroup& N, std::size_t b, std::uint32_t p);

nlohmann::json to_json(const BlockSet& blocks);

}  // namespace bb
