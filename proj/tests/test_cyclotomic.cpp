#include <complex>
#include <random>

#include "bb/cyclotomic.hpp"
#include "doctest.h"

using namespace bb;

namespace {

std::complex<double> numeric(std::uint32_t n, const std::vector<Rational>& c) {
  std::complex<double> z = 0;
  for (std::size_t k = 0; k < c.size(); ++k)
    z += static_cast<double>(c[k].num()) / static_cast<double>(c[k].den()) * std::polar(1.0, 2 * M_PI * k / n);
  return z;
}

std::complex<double> numeric(const Cyclotomic& x) { return numeric(x.ambient(), x.raw()); }

Cyclotomic z(std::uint32_t n, std::int64_t k = 1) { return Cyclotomic::root_of_unity(n, k); }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  // Φ_105 is the first with a coefficient outside {-1,0,1}.
  const auto& p105 = cyclotomic_polynomial(105);
  CHECK(p105.size() == 49);
  CHECK(*std::min_element(p105.begin(), p105.end()) == -2);
  // Roots are the primitive roots of unity.
  for (std::uint32_t n : {5u, 9u, 20u, 21u, 30u}) {
    const auto& p = cyclotomic_polynomial(n);
    CHECK(p.size() == euler_phi(n) + 1);
    std::complex<double> v = 0, w = std::polar(1.0, 2 * M_PI / n);
    for (std::size_t k = 0; k < p.size(); ++k) v += static_cast<double>(p[k]) * std::pow(w, static_cast<double>(k));
    CHECK(std::abs(v) < 1e-8);
  }
}

TEST_CASE("basic identities") {
  CHECK(z(3) + z(3, 2) == Cyclotomic(-1));
  CHECK(z(4) * z(4) == Cyclotomic(-1));
  Cyclotomic s3 = z(3) * Rational(2) + Cyclotomic(1);
  CHECK(s3 * s3 == Cyclotomic(-3));
  Cyclotomic r2 = z(8) + z(8, 7);
  CHECK((r2 * r2).to_rational() == Rational(2));
  Cyclotomic sum5;
  for (int k = 0; k < 5; ++k) sum5 += z(5, k);
  CHECK(sum5.is_zero());
  CHECK(z(6).normal_form().first == 3);
  CHECK((z(12) + z(12, 11)).normal_form().first == 12);
  CHECK((z(7) + z(7, 6)).conj() == z(7) + z(7, 6));
  CHECK_FALSE(z(7).is_rational());
  CHECK_THROWS_AS(z(5).to_rational(), std::domain_error);
  CHECK((z(3) / Rational(2)).is_algebraic_integer() == false);
  CHECK((z(15, 4) * z(15, 7)).is_algebraic_integer());
  CHECK(z(10).galois(3) == z(10, 3));
  CHECK_THROWS(z(10).galois(5));
}

TEST_CASE("normal forms agree numerically with raw values") {
  std::mt19937_64 rng(7);
  const std::uint32_t conductors[] = {1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 20, 24, 30};
  for (int trial = 0; trial < 300; ++trial) {
    std::uint32_t a = conductors[rng() % std::size(conductors)], b = conductors[rng() % std::size(conductors)];
    Cyclotomic x, y;
    for (int t = 0; t < 3; ++t) x += z(a, static_cast<std::int64_t>(rng() % a)) * Rational(static_cast<std::int64_t>(rng() % 7) - 3);
    for (int t = 0; t < 3; ++t) y += z(b, static_cast<std::int64_t>(rng() % b)) * Rational(static_cast<std::int64_t>(rng() % 5) - 2, 2);
    Cyclotomic p = x * y;
    auto [m, c] = p.normal_form();
    CHECK(std::abs(numeric(m, c) - numeric(p)) < 1e-9);
    CHECK(std::abs(numeric(p.conj()) - std::conj(numeric(p))) < 1e-9);
    // Normal form is idempotent and equality is consistent with it.
    Cyclotomic q = Cyclotomic::from_coefficients(m, c);
    CHECK(q == p);
    CHECK(q.normal_form() == p.normal_form());
    CHECK(p.is_zero() == (std::abs(numeric(p)) < 1e-9));
    CHECK(p.is_rational() == (m == 1));
  }
}
