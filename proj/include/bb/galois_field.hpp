#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <map>
#include <vector>

#include "bb/cyclotomic.hpp"

namespace bb {

using u128 = unsigned __int128;

/// Prime factors of p^k - 1, via Φ_d(p) for d | k.  Throws if a factor
/// exceeds 64 bits.
std::vector<u128> prime_factors_pk_minus_1(std::uint64_t p, std::uint32_t k);

/// GF(p^k) as GF(p)[x]/(f) where f is the least primitive polynomial of
/// degree k, ordering candidates by their coefficient vector read as a
/// base-p number (constant term least significant).  x is a generator of
/// the multiplicative group.
class GaloisField {
public:
  using Elem = std::vector<std::uint32_t>;  // k coefficients, constant term first

  GaloisField(std::uint32_t p, std::uint32_t k);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  u128 size() const { return q_; }
  /// Monic modulus, constant term first (length k + 1).
  const std::vector<std::uint32_t>& modulus() const { return f_; }

  Elem zero() const { return Elem(k_, 0); }
  Elem one() const;
  Elem generator() const;
  Elem from_int(std::int64_t v) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scale(const Elem& a, std::uint32_t s) const;
  Elem pow(Elem a, u128 e) const;
  Elem inv(const Elem& a) const;
  static bool is_zero(const Elem& a);

  /// Polynomial notation in x, e.g. "x^2+2*x+1".
  std::string to_string(const Elem& a) const;

private:
  std::uint32_t p_, k_;
  u128 q_;
  std::vector<std::uint32_t> f_;
};

struct NotPIntegral : std::domain_error {
  using std::domain_error::domain_error;
};

/// The reduction map Z_(p)[ζ_e] → GF(p^k), e = exp(G).  It sends ζ_m to
/// ω = x^{(q-1)/m} for m the p'-part of e, and p-power roots of unity to 1.
class ModularReduction {
public:
  ModularReduction(std::uint32_t p, std::uint64_t exponent);

  std::uint32_t prime() const { return p_; }
  std::uint64_t p_prime_exponent() const { return m_; }
  const GaloisField& field() const { return field_; }
  const GaloisField::Elem& omega() const { return omega_pow_[1 % m_]; }
  const GaloisField::Elem& omega_power(std::int64_t j) const;

  GaloisField::Elem reduce(const Rational& r) const;
  /// Throws NotPIntegral if x is not integral at p.
  GaloisField::Elem reduce(const Cyclotomic& x) const;

  /// j with ω^j = a, if a lies in <ω>.
  std::optional<std::uint64_t> log_omega(const GaloisField::Elem& a) const;
  /// The complex root of unity lifting ω^j: ζ_m^j.
  Cyclotomic lift(std::uint64_t j) const { return Cyclotomic::root_of_unity(static_cast<std::uint32_t>(m_), static_cast<std::int64_t>(j)); }

private:
  std::uint32_t p_;
  std::uint64_t e_, m_;
  GaloisField field_;
  std::vector<GaloisField::Elem> omega_pow_;
  std::map<GaloisField::Elem, std::uint64_t> log_;
};

}  // namespace bb
