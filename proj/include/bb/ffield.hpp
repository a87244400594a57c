#pragma once
// Dense linear algebra over a small finite field held in Zech-logarithm form.

#include <cstdint>
#include <vector>

#include "bb/galois_field.hpp"

namespace bb {

/// GF(q) for q up to 2^22.  An element is 0 for zero and 1 + log_x(a)
/// otherwise, where x is the generator of the GaloisField it was built
/// from, so conversions to and from GaloisField::Elem are exact.
class SmallField {
public:
  using E = std::uint32_t;
  static constexpr std::uint64_t kMaxSize = 1u << 22;

  explicit SmallField(const GaloisField& F);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t size() const { return q_; }
  const GaloisField& galois_field() const { return F_; }

  static constexpr E zero() { return 0; }
  static constexpr E one() { return 1; }
  /// x^k for the defining generator x.
  E power_of_generator(std::uint64_t k) const { return static_cast<E>(1 + k % (q_ - 1)); }
  std::uint32_t log(E a) const { return a - 1; }

  E add(E a, E b) const;
  E neg(E a) const;
  E sub(E a, E b) const { return add(a, neg(b)); }
  E mul(E a, E b) const;
  E inv(E a) const;
  E from_int(std::int64_t v) const;

  E from_galois(const GaloisField::Elem& a) const;
  GaloisField::Elem to_galois(E a) const;

private:
  GaloisField F_;
  std::uint32_t p_, q_;
  std::vector<E> zech_;          // 1 + x^n
  std::vector<E> log_of_code_;   // base-p code of an element -> E
  std::vector<std::uint32_t> code_of_log_;
  E minus_one_;
};

/// Row-major matrix over a SmallField.
struct FFMat {
  std::size_t rows = 0, cols = 0;
  std::vector<SmallField::E> a;

  FFMat() = default;
  FFMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  static FFMat identity(std::size_t n);

  SmallField::E& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  SmallField::E operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  friend bool operator==(const FFMat&, const FFMat&) = default;
};

using FFVec = std::vector<SmallField::E>;

FFMat mat_mul(const SmallField& F, const FFMat& x, const FFMat& y);
FFMat mat_add(const SmallField& F, const FFMat& x, const FFMat& y);
FFMat mat_scale(const SmallField& F, const FFMat& x, SmallField::E s);
FFMat transpose(const FFMat& x);
FFMat kronecker(const SmallField& F, const FFMat& x, const FFMat& y);
FFVec vec_mat(const SmallField& F, const FFVec& v, const FFMat& m);

std::size_t rank(const SmallField& F, FFMat m);
/// Basis of the left null space {v : v m = 0}, as rows.
FFMat left_nullspace(const SmallField& F, const FFMat& m);
/// Inverse of a square matrix; throws std::domain_error if singular.
FFMat inverse(const SmallField& F, const FFMat& m);
SmallField::E determinant(const SmallField& F, FFMat m);
/// det(tI - m), constant term first.
std::vector<SmallField::E> charpoly(const SmallField& F, const FFMat& m);

}  // namespace bb
