#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bb/blocks.hpp"
#include "bb/chartable.hpp"
#include "json.hpp"

namespace bb {

struct NotDefectZero : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Regime { defect_zero, central_defect, ramification_full };
std::string to_string(Regime r);

/// υ: Bl(G/N) → Bl(G | b), bl(η̄) ↦ bl(θ̃η).
struct BlockMapReport {
  std::uint32_t prime = 0;
  std::size_t block_of_theta = 0;                  // b ∈ Bl(N)
  std::vector<std::size_t> map;                    // per block of G/N
  std::vector<std::size_t> covering;               // Bl(G | b)
  std::vector<std::vector<std::size_t>> fibers;    // per entry of `covering`
  bool well_defined = false;
  bool surjective = false;
  bool bijective = false;
  std::vector<Regime> regimes;                     // filled by bijectivity_regimes
  /// Lemma-level expectations: always well defined and surjective, and a
  /// bijection whenever a regime applies.
  bool consistent() const { return well_defined && surjective && (regimes.empty() || bijective); }
};

/// θ̃ ∈ Irr(G) must restrict irreducibly to N (NotAnExtension otherwise);
/// θ = θ̃_N.  `quotient` is G/N.
BlockMapReport upsilon(const ClassFunction& theta_tilde, const PermGroup& N, const Quotient& quotient,
                       std::uint32_t p);

struct ProductFormula {
  Cyclotomic lhs;  // λ_{θ̃η}(Cl_G(g)^+)
  Cyclotomic rhs;  // λ_{θ̃_L}(Cl_L(g)^+) · λ_η̄(Cl_{G/N}(ḡ)^+)
  bool holds() const { return lhs == rhs; }
};
/// Both sides evaluated from the tables of G, L and G/N, with L/N the
/// centralizer of gN in G/N.  `eta_bar` indexes Irr(G/N).
ProductFormula product_formula_check(const ClassFunction& theta_tilde, const PermGroup& N, const Quotient& quotient,
                                     std::size_t eta_bar, const Perm& g);

struct DefectZeroIdentity {
  Cyclotomic coset_sum;                 // Σ_{c ∈ gN} θ̃(c)θ̃(c^-1)
  std::uint64_t normal_order = 0;
  std::optional<Perm> nonvanishing;     // c ∈ gN with λ_{θ̃_L}(Cl_L(c)^+)* ≠ 0
  bool holds() const { return coset_sum == Cyclotomic(static_cast<std::int64_t>(normal_order)) && nonvanishing.has_value(); }
};
/// Throws NotDefectZero unless θ = θ̃_N has θ(1)_p = |N|_p.
DefectZeroIdentity defect_zero_identity_check(const ClassFunction& theta_tilde, const PermGroup& N,
                                              const Quotient& quotient, const Perm& g, std::uint32_t p);

/// υ together with the hypotheses that force a bijection: b of defect
/// zero, D·C_G(D) = G, or G[b] = G.
BlockMapReport bijectivity_regimes(const ClassFunction& theta_tilde, const PermGroup& N, const Quotient& quotient,
                                   std::uint32_t p);

/// Set-level form of the extension transfer for D ⊴ G inside N and μ ∈
/// Irr(D) G-invariant: the characters of rdz(N | μ) that extend to G are
/// no more numerous than those of dz(N/D) that do, and when both sets are
/// singletons the implication "θ_μ extends ⇒ θ extends" is exact.
struct ExtensionTransfer {
  std::vector<std::size_t> dz;            // θ ∈ Irr(N), D ≤ ker θ, defect zero over N/D
  std::vector<std::size_t> dz_extending;
  std::vector<std::size_t> rdz;           // ψ ∈ Irr(N | μ), ψ(1)_p/μ(1)_p = |N:D|_p
  std::vector<std::size_t> rdz_extending;
  bool holds() const;
};
ExtensionTransfer extension_transfer_check(const PermGroup& G, const PermGroup& N, const PermGroup& D,
                                           const ClassFunction& mu, std::uint32_t p);

nlohmann::json to_json(const BlockMapReport& r);

}  // namespace bb
