#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "bb/perm.hpp"

namespace bb {

class ConjugacyClassSet;

struct NotASubgroup : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dense enumeration of the elements of a group together with a reverse
/// lookup.  Index 0 is always the identity.
class ElementIndex {
public:
  explicit ElementIndex(std::vector<Perm> elements);

  std::size_t size() const { return elements_.size(); }
  const Perm& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<Perm>& all() const { return elements_; }

  std::optional<std::uint32_t> find(const Perm& g) const;
  std::uint32_t index_of(const Perm& g) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }

private:
  std::vector<Perm> elements_;
  std::vector<std::uint32_t> inverse_;
  std::unordered_map<Perm, std::uint32_t, PermHash> index_;
};

/// One level of a stabilizer chain: a base point, the generators of the
/// point stabilizer of all previous base points, and a transversal for the
/// orbit of the base point.
struct ChainLevel {
  Perm::point base = 0;
  std::vector<Perm> generators;
  std::vector<Perm::point> orbit;
  // transversal[x] maps base to x; empty for points outside the orbit.
  std::vector<std::optional<Perm>> transversal;
};

/// A finite permutation group with a stabilizer-chain certificate of its
/// order.  Copies share the underlying chain and lazily computed caches.
class PermGroup {
public:
  /// Largest group the element enumeration will materialize.
  static constexpr std::uint64_t kMaxEnumeration = 400000;

  PermGroup();
  PermGroup(std::size_t degree, std::vector<Perm> generators);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const;
  const std::vector<Perm>& generators() const;
  std::uint64_t order() const;
  std::span<const ChainLevel> chain() const;
  std::vector<Perm::point> base() const;
  Perm identity() const { return Perm::identity(degree()); }

  bool contains(const Perm& g) const;
  bool contains(const PermGroup& h) const;
  bool is_trivial() const { return order() == 1; }

  /// Sifts g through the chain; returns the residue (identity iff g is a member).
  Perm sift(const Perm& g) const;

  /// All elements; enumerated on first use.
  const ElementIndex& elements() const;

  /// Conjugacy classes; computed on first use.
  const ConjugacyClassSet& classes() const;

  std::uint64_t exponent() const;

  /// Same set of elements (orders equal and mutual containment).
  bool same_group(const PermGroup& other) const;

  /// True when both handles share one underlying object (and hence one
  /// class numbering).
  bool same_object(const PermGroup& other) const { return impl_ == other.impl_; }

  /// Per-object memo for derived data owned by other modules.  `make` runs
  /// at most once per key.
  std::shared_ptr<const void> memo(const std::string& key,
                                   const std::function<std::shared_ptr<const void>()>& make) const;

private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// Builds a group from generators.  All generators must share the degree.
PermGroup build_group(std::size_t degree, std::vector<Perm> generators);

}  // namespace bb
