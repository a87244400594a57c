#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bb/perm_group.hpp"

namespace bb {

struct NotNormal : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotCentral : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotAnAutomorphism : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Subgroup of G generated by gens; throws NotASubgroup if a generator lies outside G.
PermGroup subgroup(const PermGroup& G, std::vector<Perm> gens);

/// Group generated by the generators of both arguments.
PermGroup join(const PermGroup& H, const PermGroup& K);

PermGroup centralizer(const PermGroup& G, const Perm& g);
PermGroup centralizer(const PermGroup& G, const PermGroup& H);
PermGroup normalizer(const PermGroup& G, const PermGroup& H);
PermGroup center(const PermGroup& G);
PermGroup intersection(const PermGroup& H, const PermGroup& K);

/// A Sylow p-subgroup; the trivial group if p does not divide |G|.
PermGroup sylow(const PermGroup& G, std::uint64_t p);

PermGroup commutator_subgroup(const PermGroup& G);
PermGroup normal_closure(const PermGroup& G, const PermGroup& H);
/// All normal subgroups, as joins of normal closures of classes, sorted by order.
std::vector<PermGroup> normal_subgroups(const PermGroup& G);
PermGroup conjugate(const PermGroup& H, const Perm& g);

bool is_normal(const PermGroup& G, const PermGroup& N);
bool is_central(const PermGroup& G, const PermGroup& Z);
bool is_abelian(const PermGroup& G);

/// Some g in G with H^g = K, if H and K are conjugate in G.
std::optional<Perm> conjugating_element(const PermGroup& G, const PermGroup& H,
                                        const PermGroup& K);

/// |n|_p, the p-part of n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// A homomorphism given by an element map.  Element images are evaluated
/// through `map`; `generator_images` records the images of the source's
/// generators.
class GroupHom {
public:
  GroupHom(PermGroup source, PermGroup target, std::function<Perm(const Perm&)> map);

  /// Homomorphism from generator images; every element image is computed
  /// by breadth-first search of the Cayley graph, which also checks that
  /// the images respect every relation of the source.
  static GroupHom from_generator_images(const PermGroup& source, const PermGroup& target,
                                        const std::vector<Perm>& images);

  const PermGroup& source() const { return source_; }
  const PermGroup& target() const { return target_; }
  const std::vector<Perm>& generator_images() const { return generator_images_; }
  Perm operator()(const Perm& g) const { return map_(g); }

  /// Kernel, computed on first use by enumerating the source.
  const PermGroup& kernel() const;
  PermGroup image() const;
  /// Preimage of a subgroup of the target.
  PermGroup preimage(const PermGroup& K) const;

  /// |ker|·|image| == |source| and the map respects products on sampled pairs.
  bool verify(std::size_t samples = 64) const;

private:
  PermGroup source_;
  PermGroup target_;
  std::vector<Perm> generator_images_;
  std::function<Perm(const Perm&)> map_;
  std::shared_ptr<std::optional<PermGroup>> kernel_;
};

struct Quotient {
  PermGroup group;
  GroupHom hom;
  /// A coset representative for each point of the quotient's action.
  std::vector<Perm> coset_reps;
};

/// G/N realized as the action of G on the right cosets of N.
Quotient quotient(const PermGroup& G, const PermGroup& N);

/// Class fusion H -> G: for each H-class, the G-class containing it.
std::vector<std::uint32_t> class_fusion(const PermGroup& H, const PermGroup& G);

/// Automorphisms of G given by generator images, one list per automorphism.
/// Orbit of `start` under a right action of G on integer labels, with a
/// transversal (transversal[i] carries start to points[i]) and the
/// stabilizer built from Schreier generators.
struct OrbitStabilizer {
  std::vector<std::size_t> points;
  std::vector<Perm> transversal;
  PermGroup stabilizer;
};
OrbitStabilizer orbit_stabilizer(const PermGroup& G, std::size_t start,
                                 const std::function<std::size_t(std::size_t, const Perm&)>& act);

struct AutomorphismMaps {
  std::vector<std::vector<Perm>> images;
};

struct SemidirectProduct {
  PermGroup group;  // degree |G|: points are the elements of G
  GroupHom embed_normal;
  GroupHom embed_complement;
  PermGroup normal_copy;
  PermGroup complement_copy;
  /// Permutation of G's element indices induced by each automorphism generator.
  std::vector<std::vector<std::uint32_t>> automorphism_actions;
};

/// Element-index permutation induced by an automorphism of G given by the
/// images of G's generators.  Throws NotAnAutomorphism when the map is not
/// a bijective homomorphism.
std::vector<std::uint32_t> automorphism_on_elements(const PermGroup& G,
                                                    const std::vector<Perm>& images);

/// G ⋊ A where A is generated by the supplied automorphisms.  G acts on its
/// own elements by right multiplication and A through the automorphisms.
SemidirectProduct semidirect_product(const PermGroup& G, const AutomorphismMaps& action);

struct DirectProduct {
  PermGroup group;
  GroupHom embed_first;
  GroupHom embed_second;
};

DirectProduct direct_product(const PermGroup& G, const PermGroup& H);

/// Central product of G and H identifying the central subgroup Zg of G
/// with Zh of H via the generator correspondence zg[i] <-> zh[i].
struct CentralProduct {
  PermGroup group;
  GroupHom embed_first;
  GroupHom embed_second;
};

CentralProduct central_product(const PermGroup& G, const PermGroup& H, const std::vector<Perm>& zg,
                               const std::vector<Perm>& zh);

/// Regular permutation representation of G on its own elements (right multiplication).
GroupHom regular_representation(const PermGroup& G);

}  // namespace bb
