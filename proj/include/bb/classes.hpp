#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "bb/perm.hpp"

namespace bb {

class ElementIndex;

/// Conjugacy classes of a group whose elements have been enumerated.
///
/// Class 0 is the identity class.  The remaining classes are ordered by
/// element order, then class size, then the index of their representative
/// in the group's element enumeration.
class ConjugacyClassSet {
public:
  ConjugacyClassSet(const ElementIndex& elements, const std::vector<Perm>& generators,
                    std::uint64_t group_order);

  std::size_t count() const { return reps_.size(); }
  const Perm& representative(std::size_t c) const { return reps_[c]; }
  std::uint32_t representative_index(std::size_t c) const { return rep_index_[c]; }
  std::uint64_t size(std::size_t c) const { return sizes_[c]; }
  std::uint64_t centralizer_order(std::size_t c) const { return group_order_ / sizes_[c]; }
  std::uint64_t element_order(std::size_t c) const { return orders_[c]; }
  std::uint64_t group_order() const { return group_order_; }

  /// Class of the element with the given enumeration index.
  std::uint32_t class_of_index(std::uint32_t element) const { return class_of_[element]; }
  std::uint32_t class_of(const Perm& g) const;

  /// Class of rep^-1.
  std::uint32_t inverse_class(std::size_t c) const { return inverse_[c]; }

  /// Class of rep^k for any integer k.
  std::uint32_t power_class(std::size_t c, std::int64_t k) const;

  /// Power map for a prime dividing the exponent.
  const std::vector<std::uint32_t>& power_map(std::uint64_t prime) const;

  /// Enumeration indices of all members of class c.
  std::vector<std::uint32_t> members(std::size_t c) const;

  const std::vector<std::uint32_t>& class_of_all() const { return class_of_; }

private:
  const ElementIndex* elements_;
  std::uint64_t group_order_;
  std::vector<Perm> reps_;
  std::vector<std::uint32_t> rep_index_;
  std::vector<std::uint64_t> sizes_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint32_t> inverse_;
  std::map<std::uint64_t, std::vector<std::uint32_t>> power_maps_;
};

}  // namespace bb
