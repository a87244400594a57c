#include "bb/galois_field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bb {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 n) { return static_cast<u64>(static_cast<u128>(a) * b % n); }

u64 powmod(u64 a, u64 e, u64 n) {
  u64 r = 1 % n;
  for (a %= n; e; e >>= 1, a = mulmod(a, a, n))
    if (e & 1) r = mulmod(r, a, n);
  return r;
}

bool miller_rabin(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (n % p == 0) return n == p;
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) d /= 2, ++s;
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = mulmod(x, x, n);
      composite = x != n - 1;
    }
    if (composite) return false;
  }
  return true;
}

// Pollard–Brent with a deterministic sequence of constants.
u64 find_factor(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(u64 n, std::vector<u128>& out) {
  if (n == 1) return;
  for (u64 p = 2; p < 1000 && p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n == 1) return;
  if (miller_rabin(n)) {
    out.push_back(n);
    return;
  }
  u64 d = find_factor(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

u64 multiplicative_order(u64 p, u64 m) {
  if (m == 1) return 1;
  u64 k = 1, x = p % m;
  while (x != 1) {
    x = mulmod(x, p, m);
    ++k;
  }
  return k;
}

using Poly = std::vector<std::uint32_t>;  // constant term first, may have trailing zeros

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f for monic f.
Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t d = f.size() - 1;
  while (a.size() > d) {
    const u64 lead = a.back();
    const std::size_t shift = a.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i) a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - f[i]) * lead) % p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<u64> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + static_cast<u64>(a[i]) * b[j]) % p;
  return poly_mod(Poly(r.begin(), r.end()), f, p);
}

Poly poly_powmod(Poly a, u128 e, const Poly& f, std::uint32_t p) {
  Poly r{1};
  r = poly_mod(r, f, p);
  a = poly_mod(a, f, p);
  for (; e; e >>= 1) {
    if (e & 1) r = poly_mulmod(r, a, f, p);
    if (e > 1) a = poly_mulmod(a, a, f, p);
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // Make b monic, then a mod b.
    const u64 inv = powmod(b.back(), p - 2, p);
    for (auto& c : b) c = static_cast<std::uint32_t>(c * inv % p);
    a = poly_mod(a, b, p);
    std::swap(a, b);
  }
  return a;
}

bool irreducible(const Poly& f, std::uint32_t p, std::uint32_t k) {
  // Rabin: x^{p^k} = x mod f, and gcd(x^{p^{k/r}} - x, f) = 1 for primes r | k.
  std::vector<Poly> frob(k + 1);  // frob[i] = x^{p^i} mod f
  frob[0] = poly_mod(Poly{0, 1}, f, p);
  for (std::uint32_t i = 1; i <= k; ++i) frob[i] = poly_powmod(frob[i - 1], p, f, p);
  if (frob[k] != frob[0]) return false;
  std::uint32_t n = k;
  for (std::uint32_t r = 2; r <= n; ++r) {
    if (n % r) continue;
    while (n % r == 0) n /= r;
    Poly g = frob[k / r];
    g.resize(std::max<std::size_t>(g.size(), 2), 0);
    g[1] = (g[1] + p - 1) % p;
    if (poly_gcd(g, f, p).size() != 1) return false;
  }
  return true;
}

}  // namespace

std::vector<u128> prime_factors_pk_minus_1(std::uint64_t p, std::uint32_t k) {
  std::vector<u128> out;
  for (std::uint32_t d = 1; d <= k; ++d) {
    if (k % d) continue;
    // Φ_d(p), evaluated exactly.
    const auto& phi = cyclotomic_polynomial(d);
    __int128 v = 0;
    for (std::size_t i = phi.size(); i-- > 0;) v = v * static_cast<__int128>(p) + phi[i];
    if (v <= 0 || v > static_cast<__int128>(UINT64_MAX)) throw std::overflow_error("field too large to factor p^k - 1");
    std::vector<u128> fs;
    factor_into(static_cast<u64>(v), fs);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t k) : p_(p), k_(k), q_(1) {
  if (p < 2 || k < 1) throw std::invalid_argument("bad field parameters");
  for (std::uint32_t i = 0; i < k; ++i) {
    if (q_ > (~static_cast<u128>(0)) / p) throw std::overflow_error("field order exceeds 128 bits");
    q_ *= p;
  }
  const auto primes = prime_factors_pk_minus_1(p, k);
  Poly f(k + 1, 0);
  f[k] = 1;
  for (;;) {
    // Next candidate in base-p counting order on the low coefficients.
    std::uint32_t i = 0;
    while (i < k && ++f[i] == p) f[i++] = 0;
    if (i == k) throw std::logic_error("no primitive polynomial found");
    if (f[0] == 0) continue;
    if (!irreducible(f, p, k)) continue;
    bool primitive = true;
    for (u128 r : primes) primitive = primitive && poly_powmod(Poly{0, 1}, (q_ - 1) / r, f, p) != Poly{1};
    if (k == 1) primitive = primitive && poly_mod(Poly{0, 1}, f, p) != Poly{};
    if (primitive) break;
  }
  f_ = f;
}

GaloisField::Elem GaloisField::one() const {
  Elem e(k_, 0);
  e[0] = 1 % p_;
  return e;
}

GaloisField::Elem GaloisField::generator() const {
  Poly g = poly_mod(Poly{0, 1}, f_, p_);
  g.resize(k_, 0);
  return g;
}

GaloisField::Elem GaloisField::from_int(std::int64_t v) const {
  Elem e(k_, 0);
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  e[0] = static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  return e;
}

GaloisField::Elem GaloisField::add(const Elem& a, const Elem& b) const {
  Elem r(k_);
  for (std::uint32_t i = 0; i < k_; ++i) r[i] = (a[i] + b[i]) % p_;
  return r;
}

GaloisField::Elem GaloisField::neg(const Elem& a) const {
  Elem r(k_);
  for (std::uint32_t i = 0; i < k_; ++i) r[i] = (p_ - a[i]) % p_;
  return r;
}

GaloisField::Elem GaloisField::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

GaloisField::Elem GaloisField::scale(const Elem& a, std::uint32_t s) const {
  Elem r(k_);
  for (std::uint32_t i = 0; i < k_; ++i) r[i] = static_cast<std::uint32_t>(static_cast<u64>(a[i]) * (s % p_) % p_);
  return r;
}

GaloisField::Elem GaloisField::mul(const Elem& a, const Elem& b) const {
  Poly r = poly_mulmod(a, b, f_, p_);
  r.resize(k_, 0);
  return r;
}

GaloisField::Elem GaloisField::pow(Elem a, u128 e) const {
  Poly r = poly_powmod(a, e, f_, p_);
  r.resize(k_, 0);
  return r;
}

GaloisField::Elem GaloisField::inv(const Elem& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero in GF(q)");
  return pow(a, q_ - 2);
}

bool GaloisField::is_zero(const Elem& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

std::string GaloisField::to_string(const Elem& a) const {
  std::string s;
  for (std::size_t i = k_; i-- > 0;) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || a[i] != 1) s += std::to_string(a[i]);
    if (i > 0 && a[i] != 1) s += "*";
    if (i > 0) s += "x";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

namespace {

u64 p_prime_part(u64 e, u64 p) {
  while (e % p == 0) e /= p;
  return e;
}

}  // namespace

ModularReduction::ModularReduction(std::uint32_t p, std::uint64_t exponent)
    : p_(p),
      e_(exponent),
      m_(p_prime_part(exponent, p)),
      field_(p, static_cast<std::uint32_t>(multiplicative_order(p, p_prime_part(exponent, p)))) {
  const auto omega = field_.pow(field_.generator(), (field_.size() - 1) / m_);
  omega_pow_.reserve(m_);
  auto cur = field_.one();
  for (u64 j = 0; j < m_; ++j) {
    log_.emplace(cur, j);
    omega_pow_.push_back(cur);
    cur = field_.mul(cur, omega);
  }
}

const GaloisField::Elem& ModularReduction::omega_power(std::int64_t j) const {
  std::int64_t r = j % static_cast<std::int64_t>(m_);
  return omega_pow_[static_cast<std::size_t>(r < 0 ? r + static_cast<std::int64_t>(m_) : r)];
}

GaloisField::Elem ModularReduction::reduce(const Rational& r) const {
  if (r.den() % p_ == 0) throw NotPIntegral("rational with p in the denominator");
  auto num = field_.from_int(r.num());
  if (r.den() == 1) return num;
  return field_.mul(num, field_.inv(field_.from_int(r.den())));
}

GaloisField::Elem ModularReduction::reduce(const Cyclotomic& x) const {
  auto map_terms = [&](std::uint32_t n, const std::vector<Rational>& c) {
    std::uint64_t pa = 1, np = n;
    while (np % p_ == 0) np /= p_, pa *= p_;
    if (m_ % np) throw NotPIntegral("conductor does not divide the group exponent");
    // ζ_n ↦ ω^{(m/n')·s} with s = (p^a)^{-1} mod n'.
    std::uint64_t s = 0;
    if (np == 1) s = 0;
    else
      for (std::uint64_t t = 1; t < np; ++t)
        if (pa % np * t % np == 1) {
          s = t;
          break;
        }
    const std::uint64_t step = (m_ / np) * s % m_;
    auto acc = field_.zero();
    for (std::size_t j = 0; j < c.size(); ++j)
      if (!c[j].is_zero()) acc = field_.add(acc, field_.mul(reduce(c[j]), omega_power(static_cast<std::int64_t>(j * step % m_))));
    return acc;
  };
  bool integral = std::all_of(x.raw().begin(), x.raw().end(), [&](const Rational& v) { return v.den() % p_ != 0; });
  if (integral) return map_terms(x.ambient(), x.raw());
  auto [m, c] = x.normal_form();
  return map_terms(m, c);
}

std::optional<std::uint64_t> ModularReduction::log_omega(const GaloisField::Elem& a) const {
  auto it = log_.find(a);
  if (it == log_.end()) return std::nullopt;
  return it->second;
}

}  // namespace bb
