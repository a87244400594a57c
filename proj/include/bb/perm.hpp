#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bb {

/// Thrown when input data does not describe a bijection.
struct MalformedPermutation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A permutation of {0, ..., degree-1} stored by its image array.
///
/// Products act on the right: for permutations a and b, the point x is
/// sent by a*b to b(a(x)), so x^(ab) = (x^a)^b.
class Perm {
public:
  using point = std::uint32_t;

  Perm() = default;
  explicit Perm(std::size_t degree);
  explicit Perm(std::vector<point> images);

  static Perm identity(std::size_t degree) { return Perm(degree); }

  /// Parses 1-based cycle notation such as "(1,2,3)(4,5)" or "()".
  static Perm from_cycles(std::string_view text, std::size_t degree);

  /// 1-based cycle notation; the identity prints as "()".
  std::string to_cycles() const;

  std::size_t degree() const { return images_.size(); }
  point operator[](point x) const { return images_[x]; }
  std::span<const point> images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm pow(std::int64_t e) const;
  std::uint64_t order() const;

  /// Conjugate g^-1 * this * g.
  Perm conjugate_by(const Perm& g) const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) = default;

  std::size_t hash() const;

private:
  std::vector<point> images_;
};

/// Commutator a^-1 b^-1 a b.
Perm commutator(const Perm& a, const Perm& b);

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace bb
