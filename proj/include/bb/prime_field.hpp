#pragma once
// Arithmetic and linear algebra over a prime field GF(l), l < 2^32.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bb::gfp {

using u64 = std::uint64_t;
using Matrix = std::vector<std::vector<u64>>;

inline u64 mul(u64 a, u64 b, u64 l) { return a * b % l; }
inline u64 add(u64 a, u64 b, u64 l) { return (a + b) % l; }
inline u64 sub(u64 a, u64 b, u64 l) { return (a + l - b) % l; }

inline u64 pow(u64 a, u64 e, u64 l) {
  u64 r = 1 % l;
  a %= l;
  for (; e; e >>= 1, a = mul(a, a, l))
    if (e & 1) r = mul(r, a, l);
  return r;
}

inline u64 inv(u64 a, u64 l) {
  if (a % l == 0) throw std::domain_error("inverse of zero");
  return pow(a, l - 2, l);
}

inline u64 from_signed(std::int64_t v, u64 l) {
  std::int64_t m = v % static_cast<std::int64_t>(l);
  return static_cast<u64>(m < 0 ? m + static_cast<std::int64_t>(l) : m);
}

bool is_prime(u64 n);

/// Smallest generator of the multiplicative group of GF(l).
u64 primitive_root(u64 l);

/// Smallest prime l with l ≡ 1 (mod m) and l > lower.
u64 prime_congruent_one(u64 m, u64 lower);

/// Row-reduces in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a, u64 l);

/// Basis of {x : a x = 0} for a matrix with `cols` columns.
Matrix nullspace(Matrix a, std::size_t cols, u64 l);

/// Characteristic polynomial det(tI - a), constant term first.
std::vector<u64> charpoly(const Matrix& a, u64 l);

}  // namespace bb::gfp
