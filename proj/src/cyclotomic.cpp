#include "bb/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bb {

namespace {

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> ps;
  for (std::uint32_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

int mobius(std::uint32_t n) {
  int mu = 1;
  for (std::uint32_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  if (n > 1) mu = -mu;
  return mu;
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
  std::int64_t t = 0, nt = 1, r = n, nr = mod(a, n);
  while (nr) {
    std::int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw std::domain_error("not invertible");
  return mod(t, n);
}

// Row i holds x^i mod Φ_n in the power basis of length φ(n).
const std::vector<std::vector<std::int64_t>>& power_rows(std::uint32_t n) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::vector<std::vector<std::int64_t>>> cache;
  const auto& phi = cyclotomic_polynomial(n);
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  const std::size_t d = phi.size() - 1;
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(d, 0));
  for (std::size_t i = 0; i < n && i < d; ++i) rows[i][i] = 1;
  for (std::size_t i = d; i < n; ++i) {
    // x * row[i-1], then replace x^d by -(Φ_n - x^d).
    const auto& prev = rows[i - 1];
    std::int64_t lead = prev[d - 1];
    for (std::size_t k = d; k-- > 0;) {
      std::int64_t shifted = k ? prev[k - 1] : 0, v;
      if (__builtin_mul_overflow(lead, phi[k], &v) || __builtin_sub_overflow(shifted, v, &v))
        throw ArithmeticOverflow("cyclotomic reduction overflow");
      rows[i][k] = v;
    }
  }
  return cache.emplace(n, std::move(rows)).first->second;
}

// Reduces a raw coefficient vector of length n modulo Φ_n; the result has
// length φ(n).
std::vector<Rational> reduce_mod_phi(const std::vector<Rational>& c, std::uint32_t n) {
  const auto& rows = power_rows(n);
  const std::size_t d = rows.empty() ? 0 : rows[0].size();
  std::vector<Rational> out(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(d, c.size())));
  out.resize(d);
  for (std::size_t i = d; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    for (std::size_t k = 0; k < d; ++k)
      if (rows[i][k]) out[k] += c[i] * Rational(rows[i][k]);
  }
  return out;
}

}  // namespace

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t r = n;
  for (auto p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  // Φ_n = Π_{d|n} (x^d - 1)^{μ(n/d)}: multiply first, then divide exactly.
  std::vector<std::int64_t> poly{1};
  std::vector<std::uint32_t> divide;
  for (std::uint32_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    int m = mobius(n / d);
    if (m == 1) {
      std::vector<std::int64_t> next(poly.size() + d, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + d] += poly[i];
        next[i] -= poly[i];
      }
      poly = std::move(next);
    } else if (m == -1) {
      divide.push_back(d);
    }
  }
  for (auto d : divide) {
    // poly / (x^d - 1): q[i] = -(poly[i] - q[i-d]) read from the bottom.
    std::vector<std::int64_t> q(poly.size() - d, 0);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = -(poly[i] - (i >= d ? q[i - d] : 0));
    poly = std::move(q);
  }
  if (poly.back() < 0)
    for (auto& v : poly) v = -v;
  return cache.emplace(n, std::move(poly)).first->second;
}

Cyclotomic Cyclotomic::root_of_unity(std::uint32_t n, std::int64_t k) {
  if (n == 0) throw std::invalid_argument("conductor 0");
  std::vector<Rational> c(n);
  c[static_cast<std::size_t>(mod(k, n))] = 1;
  return Cyclotomic(n, std::move(c));
}

Cyclotomic Cyclotomic::from_coefficients(std::uint32_t n, std::vector<Rational> coeffs) {
  if (n == 0) throw std::invalid_argument("conductor 0");
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i % n] += coeffs[i];
  return Cyclotomic(n, std::move(c));
}

Cyclotomic Cyclotomic::in_ambient(std::uint32_t m) const {
  if (m == n_) return *this;
  if (m % n_) throw std::invalid_argument("ambient conductor must be a multiple");
  const std::uint32_t s = m / n_;
  std::vector<Rational> c(m);
  for (std::uint32_t j = 0; j < n_; ++j) c[j * s] = c_[j];
  return Cyclotomic(m, std::move(c));
}

void Cyclotomic::add_term(std::int64_t k, const Rational& r) { c_[static_cast<std::size_t>(mod(k, n_))] += r; }

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  const std::uint32_t m = std::lcm(a.n_, b.n_);
  Cyclotomic r = a.in_ambient(m);
  const std::uint32_t s = m / b.n_;
  for (std::uint32_t j = 0; j < b.n_; ++j)
    if (!b.c_[j].is_zero()) r.c_[j * s] += b.c_[j];
  return r;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  const std::uint32_t m = std::lcm(a.n_, b.n_);
  const std::uint32_t sa = m / a.n_, sb = m / b.n_;
  std::vector<Rational> c(m);
  for (std::uint32_t i = 0; i < a.n_; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::uint32_t j = 0; j < b.n_; ++j)
      if (!b.c_[j].is_zero()) c[(i * sa + j * sb) % m] += a.c_[i] * b.c_[j];
  }
  return Cyclotomic(m, std::move(c));
}

Cyclotomic operator*(const Cyclotomic& a, const Rational& r) {
  Cyclotomic out = a;
  for (auto& v : out.c_) v *= r;
  return out;
}

Cyclotomic operator/(const Cyclotomic& a, const Rational& r) { return a * (Rational(1) / r); }

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  if (std::gcd(mod(k, n_), static_cast<std::int64_t>(n_)) != 1 && n_ > 1)
    throw std::invalid_argument("Galois exponent not coprime to conductor");
  std::vector<Rational> c(n_);
  for (std::uint32_t j = 0; j < n_; ++j)
    if (!c_[j].is_zero()) c[static_cast<std::size_t>(mod(static_cast<std::int64_t>(j) * k, n_))] += c_[j];
  return Cyclotomic(n_, std::move(c));
}

std::vector<Rational> Cyclotomic::reduced_in(std::uint32_t m) const {
  return reduce_mod_phi(in_ambient(m).c_, m);
}

bool Cyclotomic::is_zero() const {
  bool any = false;
  for (const auto& v : c_) any = any || !v.is_zero();
  if (!any) return true;
  for (const auto& v : reduce_mod_phi(c_, n_))
    if (!v.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  // Averaging over Gal(Q(ζ_n)/Q) sends ζ_n^j to μ(n/g)/φ(n/g), g = gcd(n, j).
  Rational avg;
  for (std::uint32_t j = 0; j < n_; ++j) {
    if (c_[j].is_zero()) continue;
    std::uint32_t h = n_ / std::gcd(n_, j);
    avg += c_[j] * Rational(mobius(h), euler_phi(h));
  }
  return (*this - Cyclotomic(avg)).is_zero();
}

Rational Cyclotomic::to_rational() const {
  auto [m, c] = normal_form();
  if (m != 1) throw std::domain_error("cyclotomic value is not rational: " + to_string());
  return c[0];
}

bool Cyclotomic::is_algebraic_integer() const {
  for (const auto& v : normal_form().second)
    if (!v.is_integer()) return false;
  return true;
}

bool Cyclotomic::try_descend(std::uint32_t p, Cyclotomic& out) const {
  const std::uint32_t m = n_ / p;
  std::vector<Rational> c(m);
  if (m % p == 0) {
    for (std::uint32_t j = 0; j < n_; j += p) c[j / p] = c_[j];
  } else {
    const std::int64_t alpha = inverse_mod(p, m == 1 ? 1 : m);
    const Rational other(-1, p - 1);
    for (std::uint32_t j = 0; j < n_; ++j) {
      if (c_[j].is_zero()) continue;
      std::size_t k = m == 1 ? 0 : static_cast<std::size_t>(mod(alpha * j, m));
      c[k] += j % p == 0 ? c_[j] : c_[j] * other;
    }
  }
  Cyclotomic cand(m, std::move(c));
  if (!(cand - *this).is_zero()) return false;
  out = std::move(cand);
  return true;
}

std::pair<std::uint32_t, std::vector<Rational>> Cyclotomic::normal_form() const {
  Cyclotomic cur = *this;
  for (auto p : prime_factors(n_)) {
    Cyclotomic next;
    while (cur.n_ % p == 0 && cur.try_descend(p, next)) cur = std::move(next);
  }
  return {cur.n_, cur.reduced_in(cur.n_)};
}

bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
  auto na = a.normal_form(), nb = b.normal_form();
  if (na.first != nb.first) return na.first < nb.first;
  return std::lexicographical_compare(na.second.begin(), na.second.end(), nb.second.begin(), nb.second.end());
}

std::string Cyclotomic::to_string() const {
  auto [m, c] = normal_form();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    Rational v = c[k];
    if (!first) os << (v < Rational(0) ? " - " : " + ");
    else if (v < Rational(0)) os << "-";
    if (v < Rational(0)) v = -v;
    first = false;
    if (k == 0) {
      os << v;
      continue;
    }
    if (!(v == Rational(1))) os << v << "*";
    os << "z" << m;
    if (k > 1) os << "^" << k;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace bb
