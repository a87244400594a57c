#include "bb/ffield.hpp"

#include <stdexcept>

namespace bb {

namespace {

std::uint32_t encode(const GaloisField::Elem& a, std::uint32_t p) {
  std::uint32_t c = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) c = c * p + *it;
  return c;
}

}  // namespace

SmallField::SmallField(const GaloisField& F) : F_(F), p_(F.characteristic()) {
  if (F.size() > kMaxSize) throw std::invalid_argument("SmallField: field too large");
  q_ = static_cast<std::uint32_t>(F.size());
  const std::uint32_t n = q_ - 1;
  code_of_log_.resize(n);
  log_of_code_.assign(q_, 0);
  GaloisField::Elem x = F.one(), gen = F.generator();
  for (std::uint32_t k = 0; k < n; ++k) {
    std::uint32_t c = encode(x, p_);
    code_of_log_[k] = c;
    log_of_code_[c] = k + 1;
    x = F.mul(x, gen);
  }
  zech_.resize(n);
  for (std::uint32_t k = 0; k < n; ++k) zech_[k] = from_galois(F.add(F.one(), to_galois(k + 1)));
  minus_one_ = from_galois(F.neg(F.one()));
}

SmallField::E SmallField::add(E a, E b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t n = q_ - 1;
  std::uint32_t d = (b + n - a) % n;  // log b - log a
  E z = zech_[d];
  return z == 0 ? 0 : mul(a, z);
}

SmallField::E SmallField::neg(E a) const { return mul(a, minus_one_); }

SmallField::E SmallField::mul(E a, E b) const {
  if (a == 0 || b == 0) return 0;
  std::uint32_t s = (a - 1) + (b - 1);
  if (s >= q_ - 1) s -= q_ - 1;
  return s + 1;
}

SmallField::E SmallField::inv(E a) const {
  if (a == 0) throw std::domain_error("SmallField: inverse of zero");
  return a == 1 ? 1 : (q_ - 1) - (a - 1) + 1;
}

SmallField::E SmallField::from_int(std::int64_t v) const { return from_galois(F_.from_int(v)); }

SmallField::E SmallField::from_galois(const GaloisField::Elem& a) const { return log_of_code_[encode(a, p_)]; }

GaloisField::Elem SmallField::to_galois(E a) const {
  GaloisField::Elem out(F_.degree(), 0);
  if (a == 0) return out;
  std::uint32_t c = code_of_log_[a - 1];
  for (auto& d : out) {
    d = c % p_;
    c /= p_;
  }
  return out;
}

FFMat FFMat::identity(std::size_t n) {
  FFMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = SmallField::one();
  return m;
}

FFMat mat_mul(const SmallField& F, const FFMat& x, const FFMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  FFMat out(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      auto c = x(i, k);
      if (c == 0) continue;
      const auto* yr = &y.a[k * y.cols];
      auto* orow = &out.a[i * out.cols];
      for (std::size_t j = 0; j < y.cols; ++j)
        if (yr[j]) orow[j] = F.add(orow[j], F.mul(c, yr[j]));
    }
  return out;
}

FFMat mat_add(const SmallField& F, const FFMat& x, const FFMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("mat_add: shape mismatch");
  FFMat out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = F.add(out.a[i], y.a[i]);
  return out;
}

FFMat mat_scale(const SmallField& F, const FFMat& x, SmallField::E s) {
  FFMat out = x;
  for (auto& v : out.a) v = F.mul(v, s);
  return out;
}

FFMat transpose(const FFMat& x) {
  FFMat out(x.cols, x.rows);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) out(j, i) = x(i, j);
  return out;
}

FFMat kronecker(const SmallField& F, const FFMat& x, const FFMat& y) {
  FFMat out(x.rows * y.rows, x.cols * y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) {
      auto c = x(i, j);
      if (c == 0) continue;
      for (std::size_t k = 0; k < y.rows; ++k)
        for (std::size_t l = 0; l < y.cols; ++l) out(i * y.rows + k, j * y.cols + l) = F.mul(c, y(k, l));
    }
  return out;
}

FFVec vec_mat(const SmallField& F, const FFVec& v, const FFMat& m) {
  FFVec out(m.cols, 0);
  for (std::size_t k = 0; k < m.rows; ++k) {
    if (v[k] == 0) continue;
    const auto* r = &m.a[k * m.cols];
    for (std::size_t j = 0; j < m.cols; ++j)
      if (r[j]) out[j] = F.add(out[j], F.mul(v[k], r[j]));
  }
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const SmallField& F, FFMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t s = r;
    while (s < m.rows && m(s, c) == 0) ++s;
    if (s == m.rows) continue;
    if (s != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(s, j), m(r, j));
    auto inv = F.inv(m(r, c));
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) = F.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      auto f = F.neg(m(i, c));
      for (std::size_t j = c; j < m.cols; ++j)
        if (m(r, j)) m(i, j) = F.add(m(i, j), F.mul(f, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const SmallField& F, FFMat m) { return rref(F, m).size(); }

FFMat left_nullspace(const SmallField& F, const FFMat& m) {
  // v m = 0  ⇔  mᵀ vᵀ = 0.
  FFMat t = transpose(m);
  auto pivots = rref(F, t);
  std::vector<bool> is_pivot(t.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  FFMat out(t.cols - pivots.size(), t.cols);
  std::size_t row = 0;
  for (std::size_t f = 0; f < t.cols; ++f) {
    if (is_pivot[f]) continue;
    out(row, f) = SmallField::one();
    for (std::size_t i = 0; i < pivots.size(); ++i) out(row, pivots[i]) = F.neg(t(i, f));
    ++row;
  }
  return out;
}

FFMat inverse(const SmallField& F, const FFMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse: not square");
  const std::size_t n = m.rows;
  FFMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = SmallField::one();
  }
  auto pivots = rref(F, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
  FFMat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

SmallField::E determinant(const SmallField& F, FFMat m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant: not square");
  const std::size_t n = m.rows;
  SmallField::E det = SmallField::one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t s = c;
    while (s < n && m(s, c) == 0) ++s;
    if (s == n) return 0;
    if (s != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(s, j), m(c, j));
      det = F.neg(det);
    }
    det = F.mul(det, m(c, c));
    auto inv = F.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      auto f = F.neg(F.mul(m(i, c), inv));
      for (std::size_t j = c; j < n; ++j)
        if (m(c, j)) m(i, j) = F.add(m(i, j), F.mul(f, m(c, j)));
    }
  }
  return det;
}

std::vector<SmallField::E> charpoly(const SmallField& F, const FFMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("charpoly: not square");
  const std::size_t n = m.rows;
  FFMat h = m;
  // Reduce to upper Hessenberg form by similarity.
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t s = c + 1;
    while (s < n && h(s, c) == 0) ++s;
    if (s == n) continue;
    if (s != c + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(s, j), h(c + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, s), h(i, c + 1));
    }
    auto inv = F.inv(h(c + 1, c));
    for (std::size_t i = c + 2; i < n; ++i) {
      if (h(i, c) == 0) continue;
      auto f = F.mul(h(i, c), inv);
      // row_i -= f row_{c+1}; col_{c+1} += f col_i
      for (std::size_t j = 0; j < n; ++j)
        if (h(c + 1, j)) h(i, j) = F.sub(h(i, j), F.mul(f, h(c + 1, j)));
      for (std::size_t r = 0; r < n; ++r)
        if (h(r, i)) h(r, c + 1) = F.add(h(r, c + 1), F.mul(f, h(r, i)));
    }
  }
  // p_k(t) = det(tI - H_k) for the leading k×k block.
  std::vector<std::vector<SmallField::E>> P(n + 1);
  P[0] = {SmallField::one()};
  for (std::size_t k = 1; k <= n; ++k) {
    // (t - h_kk) p_{k-1}
    const auto& prev = P[k - 1];
    std::vector<SmallField::E> cur(k + 1, 0);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] = F.add(cur[i + 1], prev[i]);
      cur[i] = F.sub(cur[i], F.mul(h(k - 1, k - 1), prev[i]));
    }
    // - Σ_{i<k} h_{i,k} (Π_{j=i+1}^{k-1} h_{j,j-1}) p_{i}
    SmallField::E prod = SmallField::one();
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = F.mul(prod, h(i + 1, i));
      if (prod == 0) break;
      auto f = F.mul(prod, h(i, k - 1));
      if (f == 0) continue;
      for (std::size_t t = 0; t < P[i].size(); ++t) cur[t] = F.sub(cur[t], F.mul(f, P[i][t]));
    }
    P[k] = std::move(cur);
  }
  return P[n];
}

}  // namespace bb
