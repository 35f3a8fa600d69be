#!/usr/bin/env python3
"""Independent reference for the fixtures pinned in the C++ tests.

Plain Python integers, sympy for primality. The pairing keeps the vertical
line denominators and raises to (p^2 - 1)/q directly, so it shares no
shortcuts with the C++ Miller loop.
"""
import hashlib
import sys
from fractions import Fraction

from sympy import isprime, nextprime


class Seeded:
    def __init__(self, seed: bytes):
        self.seed, self.ctr, self.buf = seed, 0, b""

    def take(self, n):
        while len(self.buf) < n:
            self.buf += hashlib.sha256(self.seed + self.ctr.to_bytes(8, "big")).digest()
            self.ctr += 1
        out, self.buf = self.buf[:n], self.buf[n:]
        return out

    def below(self, n):
        if n == 1:
            return 0
        bits = (n - 1).bit_length()
        nbytes = (bits + 7) // 8
        mask = 0xFF >> (nbytes * 8 - bits)
        while True:
            b = bytearray(self.take(nbytes))
            b[0] &= mask
            v = int.from_bytes(b, "big")
            if v < n:
                return v

    def unit(self, q):
        return 1 + self.below(q - 1)


# --- curve y^2 = x^3 + x ------------------------------------------------------

def add(p, A, B):
    if A is None:
        return B
    if B is None:
        return A
    (x1, y1), (x2, y2) = A, B
    if x1 == x2 and (y1 + y2) % p == 0:
        return None
    if A == B:
        lam = (3 * x1 * x1 + 1) * pow(2 * y1, -1, p) % p
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
    x3 = (lam * lam - x1 - x2) % p
    return (x3, (lam * (x1 - x3) - y1) % p)


def mul(p, k, A):
    R = None
    for _ in range(k):  # only used for small k in cross-checks
        R = add(p, R, A)
    return R


def mul_fast(p, k, A):
    R, k = None, int(k)
    while k:
        if k & 1:
            R = add(p, R, A)
        A = add(p, A, A)
        k >>= 1
    return R


def smaller_sqrt(p, a):
    a %= p
    for cand in range(p) if p < 5000 else []:
        if cand * cand % p == a:
            return cand
    r = pow(a, (p + 1) // 4, p)
    if r * r % p != a:
        return None
    return min(r, p - r)


def map_to_subgroup(p, cof, data):
    for ctr in range(1 << 16):
        d = hashlib.sha256(data + ctr.to_bytes(4, "big")).digest()
        x = int.from_bytes(d, "big") % p
        y = smaller_sqrt(p, x ** 3 + x)
        if y is None:
            continue
        P = mul_fast(p, cof, (x, y))
        if P is not None:
            return P
    raise RuntimeError("no point")


def width(m):
    return (m.bit_length() + 7) // 8


def enc_point(p, P):
    w = width(p)
    if P is None:
        return bytes(1 + 2 * w)
    return b"\x04" + P[0].to_bytes(w, "big") + P[1].to_bytes(w, "big")


def enc_gt(p, g):
    w = width(p)
    return g[0].to_bytes(w, "big") + g[1].to_bytes(w, "big")


# --- F_p^2 = F_p[i]/(i^2 + 1) ---------------------------------------------------

def f2mul(p, a, b):
    return ((a[0] * b[0] - a[1] * b[1]) % p, (a[0] * b[1] + a[1] * b[0]) % p)


def f2inv(p, a):
    n = pow(a[0] * a[0] + a[1] * a[1], -1, p)
    return (a[0] * n % p, -a[1] * n % p)


def f2pow(p, a, e):
    r = (1, 0)
    while e:
        if e & 1:
            r = f2mul(p, r, a)
        a = f2mul(p, a, a)
        e >>= 1
    return r


def tate(p, q, A, B):
    if A is None or B is None:
        return (1, 0)
    # evaluation point phi(B) = (-xb, i*yb)
    X = (-B[0] % p, 0)
    Y = (0, B[1] % p)

    def line(T, U):
        # line through T and U (tangent if equal), divided by the vertical at T+U
        if T[0] == U[0] and (T[1] + U[1]) % p == 0:
            return ((X[0] - T[0]) % p, X[1])  # vertical
        if T == U:
            lam = (3 * T[0] * T[0] + 1) * pow(2 * T[1], -1, p) % p
        else:
            lam = (U[1] - T[1]) * pow(U[0] - T[0], -1, p) % p
        num = ((Y[0] - T[1] - lam * (X[0] - T[0])) % p, (Y[1] - lam * X[1]) % p)
        S = add(p, T, U)
        den = ((X[0] - S[0]) % p, X[1])
        return f2mul(p, num, f2inv(p, den))

    f, T = (1, 0), A
    for bit in bin(q)[3:]:
        if T is None:
            break
        f = f2mul(p, f2mul(p, f, f), line(T, T))
        T = add(p, T, T)
        if bit == "1":
            if add(p, T, A) is None:
                f = f2mul(p, f, ((X[0] - T[0]) % p, X[1]))
                T = None
            else:
                f = f2mul(p, f, line(T, A))
                T = add(p, T, A)
    return f2pow(p, f, (p * p - 1) // q)


# --- parameters ---------------------------------------------------------------

def params_for_order(q, seed: bytes):
    r = 1
    while True:
        p = 12 * q * r - 1
        if p % 4 == 3 and (12 * r) % q != 0 and isprime(p):
            return p, 12 * r, map_to_subgroup(p, 12 * r, b"idsdvbs/generator/" + seed)
        r += 1


def params_for_bits(q_bits, seed: bytes):
    rng = Seeded(b"idsdvbs/params/q/" + seed)
    low = 1 << (q_bits - 1)
    cand = low + rng.below(low)
    q = nextprime(cand - 1)
    if q.bit_length() > q_bits:
        q = nextprime(low)
    return (int(q),) + params_for_order(int(q), seed)


def h2(p, q, msg: bytes, U):
    d = hashlib.sha256(msg + enc_point(p, U)).digest()
    return int.from_bytes(d, "big") % (q - 1) + 1


# --- bounds -------------------------------------------------------------------

REF = dict(S_G1=Fraction(638, 100), S_G2=Fraction(531, 100), O_G1=Fraction(0), O_G2=Fraction(0),
           P_e=Fraction(2004, 100))


def bounds(qh1, qe, qs, qv, eps, q, t=Fraction(0), c=REF):
    pairs = Fraction(qh1 * (qh1 - 1))
    e = (1 - Fraction(1, q * q)) * (1 - Fraction(2, qh1)) ** (qe + qv) * (1 - 2 / pairs) ** qs * (2 / pairs) * eps
    common = (qh1 + qe + 3 * qs + qv) * c["S_G1"] + (qs + qv) * c["P_e"] + qs * c["O_G1"]
    t1 = common + c["O_G2"] + c["S_G2"] + t
    t2 = common + c["S_G1"] + c["S_G2"] + c["P_e"] + t
    return e, t1, t2


def main():
    out = sys.stdout.write
    q = 13
    p, cof, P = params_for_order(q, b"toy")
    out(f"toy: p={p} cofactor={cof} P={P}\n")
    assert (p, cof) == (311, 24)
    assert 12 * 13 * 1 - 1 == 155 and not isprime(155)
    assert mul_fast(p, q, P) is None

    out(f"sqrt(2)={smaller_sqrt(p, 2)} 2^78={pow(2, 78, p)}\n")
    out(f"(2+3i)(4+5i)={f2mul(p, (2, 3), (4, 5))}\n")

    gPP = tate(p, q, P, P)
    out(f"e(P,P)={gPP}\n")
    assert gPP != (1, 0) and f2pow(p, gPP, q) == (1, 0)
    for a in range(1, 13):
        for b in range(1, 13):
            assert tate(p, q, mul(p, a, P), mul(p, b, P)) == f2pow(p, gPP, a * b % q)

    QA = map_to_subgroup(p, cof, b"alice")
    QB = map_to_subgroup(p, cof, b"bob")
    out(f"H1(alice)={QA} H1(bob)={QB}\n")

    rng = Seeded(b"test-0")
    s = rng.unit(q)
    Ppub = mul(p, s, P)
    out(f"setup(test-0): s={s} Ppub={Ppub}\n")
    out(f"h2(hello,P)={h2(p, q, b'hello', P)}\n")

    SA, SB = mul(p, s, QA), mul(p, s, QB)
    x, y, r = 2, 3, 5
    U = mul(p, r, QA)
    Up = add(p, mul(p, x, U), mul(p, x * y % q, QA))
    h = h2(p, q, b"hello", Up)
    h1 = (pow(x, -1, q) * h + y) % q
    V = mul(p, (r + h1) % q, SA)
    sigma = tate(p, q, mul(p, x, V), QB)
    assert sigma == tate(p, q, add(p, Up, mul(p, h, QA)), SB)
    out(f"fixture x=2 y=3 r=5 m=hello: U={U} U'={Up} h={h} h1={h1} V={V} sigma={sigma}\n")
    out(f"  sig bytes={(enc_point(p, Up) + enc_gt(p, sigma)).hex()}\n")

    for case in [(2, 0, 0, 0), (10, 1, 1, 1), (100, 10, 10, 10)]:
        e, t1, t2 = bounds(*case, Fraction(1, 2), 13)
        assert e <= Fraction(1, 2)
        out(f"bounds{case}: eps'={e} t1'={t1} t2'={t2}\n")

    c = dict(S_G1=Fraction(638, 100), MTP=Fraction(304, 100), P_e=Fraction(2004, 100))
    out(f"perf sign={5 * c['S_G1'] + c['MTP'] + c['P_e']} verify={c['S_G1'] + c['MTP'] + c['P_e']} "
        f"zw_verify={c['S_G1'] + c['MTP'] + 4 * c['P_e']}\n")

    for bits, seed in [(4, b"test"), (16, b"s1"), (32, b"acceptance-mid")]:
        qq, pp, cc, PP = params_for_bits(bits, seed)
        out(f"params_for_bits({bits},{seed.decode()}): q={qq} p={pp} cofactor={cc} P={PP}\n")

    qs = 2 ** 159 + 2 ** 17 + 1
    assert isprime(qs)
    floor = 1 << 511
    r = -(-(floor + 1) // (12 * qs))
    while True:
        pp = 12 * qs * r - 1
        if pp % 4 == 3 and isprime(pp):
            break
        r += 1
    out(f"paper-scale: r={r} p bits={pp.bit_length()} p={pp}\n")


if __name__ == "__main__":
    main()
