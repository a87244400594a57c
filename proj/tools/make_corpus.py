#!/usr/bin/env python3
"""Regenerates data/corpus: permutation groups with coprime automorphisms.

Run from the repository root.  sympy is used only to cross-check orders.
"""

import itertools
import json
import os

from sympy.combinatorics import Permutation, PermutationGroup

OUT = os.path.join(os.path.dirname(__file__), "..", "data", "corpus")


def cycles(img):
    """1-based cycle string of a 0-based image list."""
    seen, parts = set(), []
    for s in range(len(img)):
        if s in seen or img[s] == s:
            continue
        c, x = [], s
        while x not in seen:
            seen.add(x)
            c.append(x + 1)
            x = img[x]
        parts.append("(" + ",".join(map(str, c)) + ")")
    return "".join(parts) or "()"


def order(gens, degree):
    if not gens:
        return 1
    return PermutationGroup([Permutation(g, size=degree) for g in gens]).order()


def compose(a, b):
    """x -> b[a[x]] (apply a first)."""
    return [b[x] for x in a]


def inverse(a):
    r = [0] * len(a)
    for i, x in enumerate(a):
        r[x] = i
    return r


def conj(g, f):
    """f^-1 g f, the image of g under the automorphism induced by f."""
    return compose(compose(inverse(f), g), f)


def write(name, degree, gens, auts=None, normals=None, expect=None):
    n = order(gens, degree)
    if expect is not None:
        assert n == expect, (name, n, expect)
    doc = {"degree": degree, "generators": [cycles(g) for g in gens]}
    with open(os.path.join(OUT, name + ".json"), "w") as f:
        json.dump(doc, f, indent=1)
        f.write("\n")
    if auts is not None:
        with open(os.path.join(OUT, name + ".aut.json"), "w") as f:
            json.dump({"images": [[cycles(x) for x in imgs] for imgs in auts]}, f, indent=1)
            f.write("\n")
    for key, ngens in (normals or {}).items():
        with open(os.path.join(OUT, f"{name}.{key}.json"), "w") as f:
            json.dump({"degree": degree, "generators": [cycles(g) for g in ngens]}, f, indent=1)
            f.write("\n")
    print(f"{name}: degree {degree}, order {n}")


# GF(2^k) with a fixed modulus; elements are ints in the polynomial basis.
class GF2k:
    def __init__(self, k, modulus):
        self.k, self.mod, self.q = k, modulus, 1 << k

    def mul(self, a, b):
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a >> self.k & 1:
                a ^= self.mod
        return r

    def pow(self, a, e):
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def inv(self, a):
        return self.pow(a, self.q - 2)

    def primitive(self):
        for g in range(2, self.q):
            if all(self.pow(g, (self.q - 1) // p) != 1 for p in prime_factors(self.q - 1)):
                return g


def prime_factors(n):
    ps, p = [], 2
    while p * p <= n:
        if n % p == 0:
            ps.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        ps.append(n)
    return ps


def sl2_32():
    F = GF2k(5, 0b100101)  # x^5 + x^2 + 1
    inf = 32
    w = F.primitive()

    def mobius(f):
        return [f(x) for x in range(inf + 1)]

    t = mobius(lambda x: inf if x == inf else x ^ 1)
    m = mobius(lambda x: inf if x == inf else F.mul(w, x))
    s = mobius(lambda x: 0 if x == inf else (inf if x == 0 else F.inv(x)))
    frob = mobius(lambda x: inf if x == inf else F.mul(x, x))
    gens = [t, m, s]
    write("sl2_32", 33, gens, auts=[[conj(g, frob) for g in gens]], expect=32736)


def sz8():
    F = GF2k(3, 0b1011)  # x^3 + x + 1
    q = 8

    def sig(x):
        return F.pow(x, 4)

    pts = [(0, 0, 0, 1)]
    for x, y in itertools.product(range(q), repeat=2):
        z = F.mul(x, y) ^ F.mul(F.pow(x, 2), sig(x)) ^ sig(y)
        pts.append((1, x, y, z))
    index = {p: i for i, p in enumerate(pts)}

    def normalize(v):
        lead = next(c for c in v if c)
        il = F.inv(lead)
        return tuple(F.mul(c, il) for c in v)

    def act(M):
        img = []
        for p in pts:
            v = [0] * 4
            for i in range(4):
                for j in range(4):
                    v[j] ^= F.mul(p[i], M[i][j])
            key = normalize(v)
            if key not in index:
                return None
            img.append(index[key])
        return img

    # Upper unitriangular matrices preserving the ovoid: a Sylow 2-subgroup.
    unip = []
    for a, b, c, d, e, f in itertools.product(range(q), repeat=6):
        M = [[1, a, b, c], [0, 1, d, e], [0, 0, 1, f], [0, 0, 0, 1]]
        img = act(M)
        if img is not None:
            unip.append(img)
    assert len(unip) == 64, len(unip)
    torus = []
    for d1, d2, d3 in itertools.product(range(1, q), repeat=3):
        img = act([[1, 0, 0, 0], [0, d1, 0, 0], [0, 0, d2, 0], [0, 0, 0, d3]])
        if img is not None and img != list(range(65)):
            torus.append(img)
    w = act([[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]])
    assert w is not None
    gens = [torus[0], w] + unip[1:3]
    while order(gens, 65) != 29120:
        gens.append(next(u for u in unip if PermutationGroup(
            [Permutation(g, size=65) for g in gens]).contains(Permutation(u, size=65)) is False))
    frob = [index[normalize(tuple(F.mul(c, c) for c in p))] for p in pts]
    write("sz8", 65, gens, auts=[[conj(g, frob) for g in gens]], expect=29120)


def regular(mul, n, gens):
    return [[mul(e, g) for e in range(n)] for g in gens]


def small():
    write("s3", 3, [[1, 0, 2], [1, 2, 0]], expect=6)
    write("s4", 4, [[1, 0, 2, 3], [1, 2, 3, 0]], expect=24)
    write("a4", 4, [[1, 2, 0, 3], [1, 0, 3, 2]], expect=12)
    write("a5", 5, [[1, 2, 0, 3, 4], [1, 2, 3, 4, 0]], expect=60)
    write("s5", 5, [[1, 0, 2, 3, 4], [1, 2, 3, 4, 0]], expect=120)
    write("c2", 2, [[1, 0]], expect=2)
    write("d10", 5, [[1, 2, 3, 4, 0], [0, 4, 3, 2, 1]], expect=10)

    # SL(2,3) on the 8 nonzero vectors (a,b) of F_3^2 at index 3a+b-1.
    def mat(m):
        out = []
        for idx in range(8):
            v = idx + 1
            a, b = v // 3, v % 3
            c, d = (m[0] * a + m[1] * b) % 3, (m[2] * a + m[3] * b) % 3
            out.append(3 * c + d - 1)
        return out

    sl = [mat([1, 1, 0, 1]), mat([0, 2, 1, 0])]
    # Q8 = <[[0,2],[1,0]], [[1,1],[1,2]]>
    q8 = [mat([0, 2, 1, 0]), mat([1, 1, 1, 2])]
    assert order(q8, 8) == 8
    write("sl2_3", 8, sl, normals={"q8": q8}, expect=24)

    # SL(2,5) on the 24 nonzero vectors of F_5^2 at index 5a+b-1; G/Z(G) = A5.
    def mat5(m):
        out = []
        for idx in range(24):
            v = idx + 1
            a, b = v // 5, v % 5
            out.append(5 * ((m[0] * a + m[1] * b) % 5) + (m[2] * a + m[3] * b) % 5 - 1)
        return out

    write("sl2_5", 24, [mat5([1, 1, 0, 1]), mat5([0, 4, 1, 0])], expect=120)

    # Quaternion units, index 4*sign + unit.
    unit = [[0, 1, 2, 3], [1, 4, 3, 6], [2, 7, 4, 1], [3, 2, 5, 4]]

    def qmul(a, b):
        r = unit[a % 4][b % 4]
        return ((a // 4 + b // 4 + r // 4) % 2) * 4 + r % 4

    Q = regular(qmul, 8, [1, 2])
    write("q8", 8, Q, expect=8)
    write("q8_c3", 8, Q, auts=[regular(qmul, 8, [2, 3])], expect=8)

    c7 = [[(x + 1) % 7 for x in range(7)]]
    write("c7_c3", 7, c7, auts=[[[(x + 2) % 7 for x in range(7)]]], expect=7)

    f21 = [[(x + 1) % 7 for x in range(7)], [2 * x % 7 for x in range(7)]]
    write("f21_c2", 7, f21, auts=[[inverse(f21[0]), f21[1]]], expect=21)

    d14 = [[(x + 1) % 7 for x in range(7)], [(-x) % 7 for x in range(7)]]
    write("d14_c3", 7, d14, auts=[[[(x + 2) % 7 for x in range(7)], d14[1]]], expect=14)

    F16 = GF2k(4, 0b10011)
    e16 = [[x ^ (1 << i) for x in range(16)] for i in range(4)]
    om = 8  # order 5 in GF(16)^*
    write("c2_4_c5", 16, e16,
          auts=[[[x ^ F16.mul(om, 1 << i) for x in range(16)] for i in range(4)]], expect=16)

    # 3^{1+2}: (x,y,z)(x',y',z') = (x+x', y+y', z+z'+xy'), index x+3y+9z,
    # with Q8 ≤ SL(2,3) acting on the Frattini quotient.
    def hmul(a, b):
        x, y, z = a % 3, a // 3 % 3, a // 9
        u, v, w_ = b % 3, b // 3 % 3, b // 9
        return (x + u) % 3 + 3 * ((y + v) % 3) + 9 * ((z + w_ + x * v) % 3)

    def hpow(a, k):
        r = 0
        for _ in range(k % 3):
            r = hmul(r, a)
        return r

    def hinv(a):
        return next(b for b in range(27) if hmul(a, b) == 0)

    def aut_map(ix, iy):
        comm = hmul(hmul(hmul(hinv(ix), hinv(iy)), ix), iy)
        img = []
        for e in range(27):
            x, y, z = e % 3, e // 3 % 3, e // 9
            img.append(hmul(hmul(hpow(ix, x), hpow(iy, y)), hpow(comm, (z - x * y) % 3)))
        return img

    H = regular(hmul, 27, [1, 3])
    # Q8 = <[[0,2],[1,0]], [[1,1],[1,2]]> acting on (x, y) coordinates.
    def el(a, b):
        return a % 3 + 3 * (b % 3)

    # These maps also generate inner automorphisms (a group of order 72);
    # its Sylow 2-subgroup is a complement acting faithfully as Q8.
    maps = PermutationGroup([Permutation(aut_map(el(0, 1), el(2, 0)), size=27),
                             Permutation(aut_map(el(1, 1), el(1, 2)), size=27)])
    assert maps.order() == 72
    # First Q8 among pairs of order-4 elements in a fixed order, so reruns agree.
    fours = sorted((g for g in maps.elements if g.order() == 4), key=lambda g: g.array_form)
    q8 = next(PermutationGroup([a, b]) for a, b in itertools.combinations(fours, 2)
              if PermutationGroup([a, b]).order() == 8 and a * b != b * a)
    assert len([g for g in q8.elements if g.order() == 2]) == 1
    auts = [regular(hmul, 27, [a.array_form[1], a.array_form[3]]) for a in q8.generators]
    write("heis3_q8", 27, H, auts=auts, expect=27)


if __name__ == "__main__":
    os.makedirs(OUT, exist_ok=True)
    small()
    sl2_32()
    sz8()
