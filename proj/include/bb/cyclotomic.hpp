#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bb/rational.hpp"

namespace bb {

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n);

std::uint32_t euler_phi(std::uint32_t n);

/// An element of a cyclotomic field Q(ζ_n), held as a rational combination
/// of the powers ζ_n^0, ..., ζ_n^{n-1}.  That spanning set is redundant, so
/// arithmetic works on this raw form and reduction to the normal form
/// (minimal conductor, power basis reduced modulo Φ_n) happens only when a
/// comparison or export needs it.
class Cyclotomic {
public:
  Cyclotomic() : n_(1), c_(1) {}
  Cyclotomic(Rational r) : n_(1), c_{r} {}  // NOLINT: implicit from rationals
  Cyclotomic(std::int64_t v) : Cyclotomic(Rational(v)) {}  // NOLINT

  /// ζ_n^k.
  static Cyclotomic root_of_unity(std::uint32_t n, std::int64_t k);
  /// Σ coeffs[k] ζ_n^k.
  static Cyclotomic from_coefficients(std::uint32_t n, std::vector<Rational> coeffs);

  /// Conductor of the current ambient power basis (not necessarily minimal).
  std::uint32_t ambient() const { return n_; }
  const std::vector<Rational>& raw() const { return c_; }

  /// Same number written over ζ_m with n_ | m.
  Cyclotomic in_ambient(std::uint32_t m) const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Rational& r);
  friend Cyclotomic operator/(const Cyclotomic& a, const Rational& r);
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  /// Adds r·ζ_ambient^k in place (k taken modulo the ambient conductor).
  void add_term(std::int64_t k, const Rational& r);

  /// Complex conjugate (ζ -> ζ^-1).
  Cyclotomic conj() const;
  /// Galois image ζ_n -> ζ_n^k, k coprime to the ambient conductor.
  Cyclotomic galois(std::int64_t k) const;

  bool is_zero() const;
  bool is_rational() const;
  /// Throws std::domain_error if the value is not rational.
  Rational to_rational() const;
  /// Integral coefficients in the reduced power basis.
  bool is_algebraic_integer() const;

  /// Normal form: minimal conductor m and coefficients over ζ_m^0..ζ_m^{φ(m)-1}.
  std::pair<std::uint32_t, std::vector<Rational>> normal_form() const;

  /// Coefficients reduced modulo Φ_m in the power basis of a fixed ambient
  /// conductor m (a multiple of the minimal conductor).
  std::vector<Rational> reduced_in(std::uint32_t m) const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return (a - b).is_zero(); }
  /// Deterministic total order on normal forms.
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b);

  std::string to_string() const;

private:
  Cyclotomic(std::uint32_t n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
  // Tries to rewrite over ζ_{n/p}; returns false if the value needs ζ_n.
  bool try_descend(std::uint32_t p, Cyclotomic& out) const;

  std::uint32_t n_;
  std::vector<Rational> c_;
};

}  // namespace bb
