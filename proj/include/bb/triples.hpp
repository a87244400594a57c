#pragma once
// Character triples (G, N, θ) with a coprime action of A: an ℓ-modular
// projective representation of X = G⋊A extending θ, its factor set α, the
// central extension X̃ built from α, and the bijection
// σ_G: Irr(G|θ) → Irr(G*|θ*) onto a triple with N* central.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bb/actions.hpp"
#include "bb/meataxe.hpp"
#include "json.hpp"

namespace bb {

/// `needed`, when nonzero, is a modulus ℓ - 1 must be divisible by.
struct SplitFailure : std::runtime_error {
  explicit SplitFailure(const std::string& what, std::uint64_t needed_modulus = 0)
      : std::runtime_error(what), needed(needed_modulus) {}
  std::uint64_t needed = 0;
};
struct NoIntertwiner : std::logic_error {
  using std::logic_error::logic_error;
};
struct NonScalarDefect : std::logic_error {
  using std::logic_error::logic_error;
};
struct TriplesOutOfScope : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An absolutely irreducible representation of `group` over GF(ℓ).  Scalars
/// lift through ζ_{ℓ-1} ↦ x, the defining generator of GF(ℓ).
struct MatrixRepOverFF {
  PermGroup group;
  std::uint32_t ell = 0;
  FFModule module;
  std::shared_ptr<const ElementMatrices> matrices;

  std::size_t degree() const { return module.dim; }
  const SmallField& field() const { return *module.field; }
  FFMat operator()(const Perm& g) const;
};

/// ℓ prime, ℓ ∤ |H|, exp(H) | ℓ - 1, where H is θ's group.  Throws
/// SplitFailure if the search ends without a constituent whose lifted
/// Brauer character is θ.
MatrixRepOverFF modular_rep_affording(const ClassFunction& theta, std::uint32_t ell, std::uint64_t seed = 1);

/// Invertible P with R(x n x^-1) = P R(n) P^-1 for n in R's group, scaled
/// so the first nonzero entry in row-major order is 1.  x must normalize
/// R's group.  Throws NoIntertwiner if the solution space is not a line.
FFMat intertwiner(const MatrixRepOverFF& R, const Perm& x);

/// Least prime ℓ ≡ 1 mod `modulus` after `after`.
std::uint32_t next_splitting_prime(std::uint64_t modulus, std::uint32_t after = 1);

struct TriplesOptions {
  std::uint64_t seed = 1;
  std::uint32_t ell = 0;          // 0: search from the least admissible prime
  std::size_t ell_attempts = 24;
  std::uint64_t max_extension_order = 100000;  // |X|·|E|
  std::int64_t max_degree = 32;                // θ(1)
};

/// α on X/N × X/N for X = G⋊A, with P(n t) = R(n) P(t) on a transversal of
/// N in X whose A-part is a genuine representation of NA extending θ.
/// Values are stored as exponents of ζ_e, e = |E|.
struct FactorSet {
  PermGroup G, N;
  ClassFunction theta;
  std::shared_ptr<const SemidirectProduct> X;
  PermGroup N_X, NA_X;              // copies of N and NA inside X
  std::uint32_t ell = 0;
  MatrixRepOverFF extension;        // representation of NA_X extending θ
  std::vector<Perm> transversal;    // t_c for each coset N t_c; t_0 = 1
  std::vector<std::size_t> a_cosets;  // coset of each element of the A-copy
  std::vector<FFMat> P;             // P(t_c)
  std::vector<std::uint32_t> coset_of;  // X element index -> coset
  std::uint64_t e = 1;
  std::vector<std::vector<std::uint64_t>> alpha;

  std::size_t cosets() const { return transversal.size(); }
  std::size_t coset(const Perm& x) const;
  /// P(x) = R(x t^-1) P(t) for x in the coset of t.
  FFMat projective(const Perm& x) const;
  Cyclotomic value(std::size_t c1, std::size_t c2) const;
  /// The scalar P(x)P(y)P(xy)^-1 as an exponent of ζ_e, computed afresh.
  std::uint64_t scalar(const Perm& x, const Perm& y) const;
  /// α(x,y)α(xy,z) = α(y,z)α(x,yz) for all coset triples.
  bool cocycle_identity() const;
  /// α(t_a, t_b) = 1 on the A-part.
  bool trivial_on_NA() const;
};

/// θ must be G-invariant and A-invariant; A acts coprimely.  Throws
/// TriplesOutOfScope past the size guards and SplitFailure if ℓ does not
/// split the data.
FactorSet factor_set(const ActionSpec& spec, const PermGroup& N, const ClassFunction& theta, std::uint32_t ell,
                     const TriplesOptions& opts = {});

/// X̃ = {(x, ε)} with (x1,ε1)(x2,ε2) = (x1x2, α(x1,x2)ε1ε2), acting
/// faithfully on X's points plus X/N × E.
struct CentralExtension {
  std::shared_ptr<const FactorSet> alpha;
  PermGroup Xt, Nt, Gt, E0, N0, At;
  ClassFunction lambda_tilde;  // on Nt: (n, ε) ↦ ε^-1
  ClassFunction theta_tilde;   // on Nt: θ × 1_E
  ClassFunction tau_N;         // τ on Nt
  ClassFunction tau_G;         // τ on Gt

  Perm element(const Perm& x, std::uint64_t eps) const;
  /// (x, ε) for an element of Xt.
  std::pair<Perm, std::uint64_t> label(const Perm& xt) const;
  /// x as an element of G, for (x, ε) in Gt.
  Perm g_part(const Perm& xt) const;
};

/// Throws SplitFailure when exp(G̃) does not divide ℓ - 1, and
/// TriplesOutOfScope when |X|·|E| exceeds the guard.
CentralExtension build_central_extension(std::shared_ptr<const FactorSet> alpha,
                                         std::uint64_t max_extension_order = 100000);

struct TripleIsomorphism {
  std::shared_ptr<const ActionSpec> spec;
  CentralExtension ext;
  std::shared_ptr<const Quotient> star;  // G̃ → G* = G̃/N₀
  PermGroup N_star;
  ClassFunction theta_star;
  std::vector<std::size_t> source;    // Irr(G|θ), indices into Irr(G)
  std::vector<std::size_t> image;     // σ_G of each, indices into Irr(G*)
  std::vector<std::size_t> target;    // Irr(G*|θ*)
  bool central = false;
  bool bijective = false;
  bool degree_ratios = false;
  bool equivariant = false;
  bool holds() const { return central && bijective && degree_ratios && equivariant; }
};

/// σ_G for θ ∈ Irr_A(N), N ⊴ G A-stable and θ G-invariant.  Tries
/// successive primes ℓ until one splits.
TripleIsomorphism sigma(const ActionSpec& spec, const PermGroup& N, const ClassFunction& theta,
                        const TriplesOptions& opts = {});

/// Block partitions of Irr(G|θ) and of their images compared: with
/// H = G[b], bl(χ1) = bl(χ2) iff bl(σχ1), bl(σχ2) cover the same block of
/// H*.  When H = G this is equality of blocks of G*.
struct BlockFiberCheck {
  std::uint32_t prime = 0;
  bool full_ramification = false;   // G[b] = G
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  bool holds() const { return mismatches == 0; }
};
BlockFiberCheck block_fiber_check(const TripleIsomorphism& iso, std::uint32_t p);

nlohmann::json to_json(const FactorSet& alpha);
nlohmann::json to_json(const TripleIsomorphism& iso);

}  // namespace bb
