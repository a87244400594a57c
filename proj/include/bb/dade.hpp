#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bb/blocks.hpp"
#include "bb/chartable.hpp"
#include "json.hpp"

namespace bb {

struct CommutatorNotInN : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct CommutatorConditionFails : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotInvariantBlock : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ChoiceDependence : std::logic_error {
  using std::logic_error::logic_error;
};

/// N ⊴ X with θ ∈ Irr(N) X-invariant.  Extensions of θ to the groups N⟨y⟩
/// are cached as they are met.
class PairingContext {
public:
  PairingContext(PermGroup X, PermGroup N, ClassFunction theta);

  const PermGroup& ambient() const { return X_; }
  const PermGroup& normal() const { return N_; }
  const ClassFunction& theta() const { return theta_; }

  /// ⟨⟨x,y⟩⟩_θ = λ(y) where ψ^x = λψ for an extension ψ of θ to N⟨y⟩.
  /// Throws CommutatorNotInN unless [x,y] ∈ N.
  Cyclotomic pairing(const Perm& x, const Perm& y) const;
  /// The same value computed with every extension ψ, in table order.
  std::vector<Cyclotomic> pairing_all_extensions(const Perm& x, const Perm& y) const;

private:
  struct Entry {
    PermGroup J;
    std::vector<ClassFunction> extensions;
    std::vector<ClassFunction> linear;  // Irr(J/N)
  };
  const Entry& entry(const Perm& y) const;
  Cyclotomic value(const Entry& e, const ClassFunction& psi, const Perm& x, const Perm& y) const;

  PermGroup X_, N_;
  ClassFunction theta_;
  mutable std::vector<Entry> cache_;
};

/// H^⊥ ∩ K = {k ∈ K : ⟨⟨k,h⟩⟩_θ = 1 for all h ∈ H}.  Requires [H,K] ≤ N
/// (CommutatorConditionFails otherwise); the result is checked to be closed.
PermGroup perp(const PairingContext& ctx, const PermGroup& H, const PermGroup& K);

/// For ρ ∈ Irr(K) extending θ (N ≤ K), is ρ restricted to H^⊥ ∩ K
/// H-invariant?  nullopt when θ has no extension to K.
std::optional<bool> perp_restriction_invariant(const PairingContext& ctx, const PermGroup& H, const PermGroup& K);

struct RamificationWitness {
  PermGroup defect_group;
  std::size_t eta = 0;      // index in the table of D·C_N(D)
  PermGroup dcn;            // D·C_N(D)
  PermGroup K;              // stabilizer of η in D·C_G(D)
  PermGroup H;              // stabilizer of η in N_N(D)
  PermGroup perp;           // H^⊥ ∩ K
  PermGroup result;         // N·(H^⊥ ∩ K)
};

struct RamificationResult {
  PermGroup subgroup;  // G[b]
  std::vector<RamificationWitness> witnesses;
  bool all_choices = false;  // every (D, η) pair was evaluated
};

/// G[b] for a G-invariant b ∈ Bl(N), evaluated from several choices of
/// defect group and canonical character.  All pairs are tried when there
/// are at most 8; otherwise at least two.  Throws NotInvariantBlock, or
/// ChoiceDependence if two choices disagree.
RamificationResult ramification_group(const PermGroup& G, const PermGroup& N, std::size_t b, std::uint32_t p);

struct CoveringUniqueness {
  std::vector<std::size_t> intermediate;       // Bl(G[b] | b)
  std::vector<std::size_t> covering_counts;    // |Bl(G | B')| per intermediate block
  bool holds() const;
};
CoveringUniqueness unique_covering_check(const PermGroup& G, const PermGroup& N, std::size_t b, std::uint32_t p);

struct QuotientCompatibility {
  PermGroup image;       // G[b]/Z inside G/Z
  PermGroup quotient_side;  // (G/Z)[b̄]
  bool contains_z = false;
  bool holds() const { return contains_z && image.same_group(quotient_side); }
};
/// Compares G[b]/Z with (G/Z)[b̄] for Z ⊴ G meeting N trivially.
QuotientCompatibility quotient_compat_check(const PermGroup& G, const PermGroup& N, std::size_t b,
                                            const PermGroup& Z, std::uint32_t p);

nlohmann::json to_json(const RamificationResult& r);

}  // namespace bb
