#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bb/cyclotomic.hpp"
#include "bb/group_ops.hpp"
#include "bb/perm_group.hpp"
#include "json.hpp"

namespace bb {

struct GroupMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct LiftFailure : std::logic_error {
  using std::logic_error::logic_error;
};
struct NotInvariant : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotAnExtension : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct IncompatibleCentral : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A class function: one value per conjugacy class of `group`, in the
/// group's own class numbering.
class ClassFunction {
public:
  ClassFunction() = default;
  ClassFunction(PermGroup group, std::vector<Cyclotomic> values);

  static ClassFunction constant(const PermGroup& G, const Cyclotomic& v);
  static ClassFunction regular(const PermGroup& G);

  const PermGroup& group() const { return group_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Cyclotomic& operator[](std::size_t c) const { return values_[c]; }
  const Cyclotomic& at(const Perm& g) const;
  /// Value at the identity as an integer; throws if it is not one.
  std::int64_t degree() const;

  ClassFunction conj() const;
  ClassFunction galois(std::int64_t k) const;
  /// Kernel as a union of classes: {g : χ(g) = χ(1)}.
  std::vector<std::uint32_t> kernel_classes() const;

  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(const ClassFunction& a, const Rational& r);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

private:
  PermGroup group_;
  std::vector<Cyclotomic> values_;
};

/// Irr(G).  Rows are sorted with the trivial character first, then by
/// degree, then by values in class order.
class CharacterTable {
public:
  CharacterTable(PermGroup G, std::vector<ClassFunction> irr);

  const PermGroup& group() const { return group_; }
  std::size_t size() const { return irr_.size(); }
  const ClassFunction& operator[](std::size_t i) const { return irr_[i]; }
  const std::vector<ClassFunction>& irr() const { return irr_; }
  std::int64_t degree(std::size_t i) const { return degrees_[i]; }
  const std::vector<std::int64_t>& degrees() const { return degrees_; }

  /// Index of an irreducible character, or nullopt.
  std::optional<std::size_t> index_of(const ClassFunction& chi) const;
  /// Multiplicities ⟨φ, χ_i⟩ of each irreducible; throws if not rational.
  std::vector<Rational> decompose(const ClassFunction& phi) const;
  /// Indices of irreducible constituents.
  std::vector<std::size_t> constituents(const ClassFunction& phi) const;

private:
  PermGroup group_;
  std::vector<ClassFunction> irr_;
  std::vector<std::int64_t> degrees_;
};

/// Irr(G) by Dixon–Schneider; memoized on the group object.
std::shared_ptr<const CharacterTable> character_table(const PermGroup& G);

/// (1/|G|) Σ_K |K| φ(K) conj(ψ(K)).
Cyclotomic inner_product(const ClassFunction& phi, const ClassFunction& psi);

/// Restriction to a subgroup H of chi's group.
ClassFunction restrict(const ClassFunction& chi, const PermGroup& H);
/// Induction from theta's group to an overgroup G.
ClassFunction induce(const ClassFunction& theta, const PermGroup& G);
/// η ∘ hom, for η a class function on hom's target.
ClassFunction pullback(const ClassFunction& eta, const GroupHom& hom);
/// θ^g: x ↦ θ(g x g^-1), for g normalizing theta's group.
ClassFunction conjugate(const ClassFunction& theta, const Perm& g);

/// Indices (in the table of G) of the irreducibles lying over θ ∈ Irr(N).
std::vector<std::size_t> irr_over(const PermGroup& G, const PermGroup& N, const ClassFunction& theta);

/// First χ ∈ Irr(G), in table order, with χ_N = θ.  Throws NotInvariant if a
/// generator of G moves θ.
std::optional<ClassFunction> find_extension(const ClassFunction& theta, const PermGroup& G);

/// η·θ̃ for η a class function on G.
ClassFunction gallagher_product(const ClassFunction& theta_tilde, const ClassFunction& eta);

/// For each η̄ ∈ Irr(G/N) (quotient table order), the index in Irr(G) of
/// η θ̃.  Throws NotAnExtension if θ̃ is not irreducible with invariant
/// irreducible restriction to N.
std::vector<std::size_t> gallagher_bijection(const ClassFunction& theta_tilde, const PermGroup& N,
                                             const Quotient& GmodN);

/// The unique χ ∈ Irr(G) lying over χ₀ ∈ Irr(K) and over the linear ν ∈
/// Irr(Z), where G = K·Z with Z central.
ClassFunction dot_with_central(const ClassFunction& chi0, const ClassFunction& nu, const PermGroup& G);

/// Value encoding: {"conductor": m, "coefficients": [...]}, the normal form.
nlohmann::json to_json(const Cyclotomic& x);
nlohmann::json to_json(const CharacterTable& table);

}  // namespace bb
