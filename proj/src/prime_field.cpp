#include "bb/prime_field.hpp"

#include <utility>

namespace bb::gfp {

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

u64 primitive_root(u64 l) {
  if (l == 2) return 1;
  std::vector<u64> ps;
  u64 m = l - 1;
  for (u64 p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      ps.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) ps.push_back(m);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 p : ps) ok = ok && pow(g, (l - 1) / p, l) != 1;
    if (ok) return g;
  }
}

u64 prime_congruent_one(u64 m, u64 lower) {
  for (u64 k = lower / m + 1;; ++k)
    if (is_prime(k * m + 1) && k * m + 1 > lower) return k * m + 1;
}

std::vector<std::size_t> rref(Matrix& a, u64 l) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    u64 s = inv(a[r][c], l);
    for (auto& v : a[r]) v = mul(v, s, l);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      u64 f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] = sub(a[i][k], mul(f, a[r][k], l), l);
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

Matrix nullspace(Matrix a, std::size_t cols, u64 l) {
  auto pivots = rref(a, l);
  std::vector<int> is_pivot(cols, -1);
  for (std::size_t i = 0; i < pivots.size(); ++i) is_pivot[pivots[i]] = static_cast<int>(i);
  Matrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f] >= 0) continue;
    std::vector<u64> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = sub(0, a[i][f], l);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<u64> charpoly(const Matrix& a, u64 l) {
  // Hessenberg reduction followed by the standard recurrence.
  const std::size_t n = a.size();
  Matrix h = a;
  for (std::size_t c = 0; c + 2 <= n; ++c) {
    std::size_t p = c + 1;
    while (p < n && h[p][c] == 0) ++p;
    if (p == n) continue;
    if (p != c + 1) {
      std::swap(h[p], h[c + 1]);
      for (auto& row : h) std::swap(row[p], row[c + 1]);
    }
    u64 s = inv(h[c + 1][c], l);
    for (std::size_t i = c + 2; i < n; ++i) {
      if (h[i][c] == 0) continue;
      u64 f = mul(h[i][c], s, l);
      for (std::size_t k = 0; k < n; ++k) h[i][k] = sub(h[i][k], mul(f, h[c + 1][k], l), l);
      for (std::size_t k = 0; k < n; ++k) h[k][c + 1] = add(h[k][c + 1], mul(f, h[k][i], l), l);
    }
  }
  // p[k] = charpoly of the leading k x k block.
  std::vector<std::vector<u64>> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<u64> next(k + 1, 0);
    // (t - h[k-1][k-1]) p[k-1]
    for (std::size_t i = 0; i < p[k - 1].size(); ++i) {
      next[i + 1] = add(next[i + 1], p[k - 1][i], l);
      next[i] = sub(next[i], mul(h[k - 1][k - 1], p[k - 1][i], l), l);
    }
    u64 prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod = mul(prod, h[k - i][k - i - 1], l);
      u64 coef = mul(prod, h[k - i - 1][k - 1], l);
      for (std::size_t j = 0; j < p[k - i - 1].size(); ++j)
        next[j] = sub(next[j], mul(coef, p[k - i - 1][j], l), l);
    }
    p[k] = std::move(next);
  }
  return p[n];
}

}  // namespace bb::gfp
