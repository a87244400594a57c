#include "bb/named_groups.hpp"

#include <array>
#include <functional>

namespace bb::named {

namespace {

Perm from_map(std::size_t n, const std::function<std::size_t(std::size_t)>& f) {
  std::vector<Perm::point> img(n);
  for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<Perm::point>(f(x));
  return Perm(std::move(img));
}

// Quaternion units: index 4*s + u with sign s and u in {1, i, j, k}.
std::size_t quat_mul(std::size_t a, std::size_t b) {
  static constexpr std::array<std::array<int, 4>, 4> unit = {{
      {0, 1, 2, 3},  // 1*
      {1, 4, 3, 6},  // i*: i*1=i, i*i=-1, i*j=k, i*k=-j  (4 = -1, 6 = -j)
      {2, 7, 4, 1},  // j*: j*1=j, j*i=-k, j*j=-1, j*k=i
      {3, 2, 5, 4},  // k*: k*1=k, k*i=j, k*j=-i, k*k=-1
  }};
  std::size_t sa = a / 4, ua = a % 4, sb = b / 4, ub = b % 4;
  int r = unit[ua][ub];
  std::size_t sign = (sa + sb + static_cast<std::size_t>(r / 4)) % 2;
  return sign * 4 + static_cast<std::size_t>(r % 4);
}

// Heisenberg group mod 3: (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y').
std::size_t heis_mul(std::size_t a, std::size_t b) {
  std::size_t x = a % 3, y = a / 3 % 3, z = a / 9;
  std::size_t u = b % 3, v = b / 3 % 3, w = b / 9;
  return (x + u) % 3 + 3 * ((y + v) % 3) + 9 * ((z + w + x * v) % 3);
}

std::size_t heis_inv(std::size_t a) {
  for (std::size_t b = 0; b < 27; ++b)
    if (heis_mul(a, b) == 0) return b;
  return 0;
}

Perm heis_right(std::size_t h) {
  return from_map(27, [h](std::size_t e) { return heis_mul(e, h); });
}

std::size_t gf16_mul(std::size_t a, std::size_t b) {
  std::size_t r = 0;
  for (int i = 0; i < 4; ++i)
    if (b >> i & 1) r ^= a << i;
  for (int i = 7; i >= 4; --i)
    if (r >> i & 1) r ^= 0x13u << (i - 4);  // x^4 + x + 1
  return r;
}

}  // namespace

PermGroup cyclic(std::size_t n) {
  return PermGroup(n, {from_map(n, [n](std::size_t x) { return (x + 1) % n; })});
}

PermGroup symmetric(std::size_t n) {
  if (n < 2) return PermGroup::trivial(n);
  return PermGroup(n, {from_map(n, [](std::size_t x) { return x < 2 ? 1 - x : x; }),
                       from_map(n, [n](std::size_t x) { return (x + 1) % n; })});
}

PermGroup alternating(std::size_t n) {
  if (n < 3) return PermGroup::trivial(n);
  Perm three = from_map(n, [](std::size_t x) { return x < 3 ? (x + 1) % 3 : x; });
  Perm big = n % 2 ? from_map(n, [n](std::size_t x) { return (x + 1) % n; })
                   : from_map(n, [n](std::size_t x) { return x == 0 ? 0 : x % (n - 1) + 1; });
  return PermGroup(n, {three, big});
}

PermGroup dihedral(std::size_t n) {
  return PermGroup(n, {from_map(n, [n](std::size_t x) { return (x + 1) % n; }),
                       from_map(n, [n](std::size_t x) { return (n - x) % n; })});
}

PermGroup quaternion() {
  return PermGroup(8, {from_map(8, [](std::size_t e) { return quat_mul(e, 1); }),
                       from_map(8, [](std::size_t e) { return quat_mul(e, 2); })});
}

PermGroup sl2_3() {
  // Vector (a,b) != 0 stored at index 3a + b - 1.
  auto act = [](std::array<int, 4> m) {
    return from_map(8, [m](std::size_t idx) {
      std::size_t v = idx + 1;
      int a = static_cast<int>(v / 3), b = static_cast<int>(v % 3);
      int c = (m[0] * a + m[1] * b) % 3, d = (m[2] * a + m[3] * b) % 3;
      return static_cast<std::size_t>(3 * c + d - 1);
    });
  };
  return PermGroup(8, {act({1, 1, 0, 1}), act({0, 2, 1, 0})});
}

PermGroup heisenberg3() { return PermGroup(27, {heis_right(1), heis_right(3)}); }

PermGroup elementary_abelian2(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < k; ++i)
    gens.push_back(from_map(n, [i](std::size_t x) { return x ^ (std::size_t{1} << i); }));
  return PermGroup(n, std::move(gens));
}

PermGroup frobenius21() {
  return PermGroup(7, {from_map(7, [](std::size_t x) { return (x + 1) % 7; }),
                       from_map(7, [](std::size_t x) { return 2 * x % 7; })});
}

NamedAction q8_c3() {
  auto right = [](std::size_t h) {
    return from_map(8, [h](std::size_t e) { return quat_mul(e, h); });
  };
  return {quaternion(), {{{right(2), right(3)}}}};
}

NamedAction c7_c3() {
  PermGroup G = cyclic(7);
  return {G, {{{G.generators()[0].pow(2)}}}};
}

NamedAction f21_c2() {
  PermGroup G = frobenius21();
  return {G, {{{G.generators()[0].inverse(), G.generators()[1]}}}};
}

NamedAction d14_c3() {
  PermGroup G = dihedral(7);
  return {G, {{{G.generators()[0].pow(2), G.generators()[1]}}}};
}

NamedAction heisenberg3_q8() {
  // M in SL(2,3) sends x, y to the elements with Frattini coordinates given
  // by the columns of M.  These maps generate Inn ⋊ Q8 of order 72; its
  // Sylow 2-subgroup is a complement acting as Q8.
  auto elem = [](int a, int b) { return static_cast<std::size_t>(a % 3 + 3 * (b % 3)); };
  auto as_perm = [](std::size_t img_x, std::size_t img_y) {
    // Automorphism as a permutation of the 27 element labels.
    std::vector<Perm::point> img(27);
    for (std::size_t e = 0; e < 27; ++e) {
      std::size_t x = e % 3, y = e / 3 % 3, z = e / 9;
      // e = x^x y^y c^(z - xy) with c = [x, y] = (0,0,1).
      std::size_t r = 0;
      for (std::size_t i = 0; i < x; ++i) r = heis_mul(r, img_x);
      for (std::size_t i = 0; i < y; ++i) r = heis_mul(r, img_y);
      std::size_t cx = heis_mul(heis_mul(heis_mul(heis_inv(img_x), heis_inv(img_y)), img_x), img_y);
      for (std::size_t i = 0; i < (z + 9 - x * y) % 3; ++i) r = heis_mul(r, cx);
      img[e] = static_cast<Perm::point>(r);
    }
    return Perm(std::move(img));
  };
  PermGroup auts(27, {as_perm(elem(0, 1), elem(2, 0)), as_perm(elem(1, 1), elem(1, 2))});
  PermGroup q8 = sylow(auts, 2);
  std::vector<std::vector<Perm>> images;
  for (const Perm& a : q8.generators()) images.push_back({heis_right(a[1]), heis_right(a[3])});
  return {heisenberg3(), {images}};
}

NamedAction c2_4_c5() {
  PermGroup G = elementary_abelian2(4);
  const std::size_t omega = 8;  // alpha^3 for alpha = x, order 5
  std::vector<Perm> imgs;
  for (std::size_t i = 0; i < 4; ++i) {
    std::size_t t = gf16_mul(omega, std::size_t{1} << i);
    imgs.push_back(from_map(16, [t](std::size_t x) { return x ^ t; }));
  }
  return {G, {{imgs}}};
}

NamedAction trivial_action(const PermGroup& G) { return {G, {}}; }

}  // namespace bb::named
