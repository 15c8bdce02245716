"""Polynomials over Q as tuples of Fraction, low-degree first.

The zero polynomial is the empty tuple; every other polynomial has a
nonzero leading coefficient.  Also provides mod-p polynomial arithmetic
(used to certify irreducibility), cyclotomic polynomials and Euler phi.
"""

from __future__ import annotations

import functools
from fractions import Fraction


def normalize(coeffs) -> tuple[Fraction, ...]:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def degree(p) -> int:
    return len(p) - 1


def add(a, b):
    n = max(len(a), len(b))
    return normalize(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def sub(a, b):
    n = max(len(a), len(b))
    return normalize(
        (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)
    )


def mul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return normalize(out)


def scale(a, c):
    c = Fraction(c)
    return normalize(x * c for x in a)


def divmod_poly(a, b):
    """Exact quotient and remainder in Q[x]; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    db = degree(b)
    lead = b[-1]
    while len(rem) - 1 >= db and any(c != 0 for c in rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < db:
            break
        shift = len(rem) - 1 - db
        factor = rem[-1] / lead
        quo[shift] = factor
        for j, cb in enumerate(b):
            rem[shift + j] -= factor * cb
        rem.pop()
    return normalize(quo), normalize(rem)


def rem_monic(a, m):
    """Remainder of a mod monic m, returned padded to degree(m) entries."""
    _, r = divmod_poly(a, m)
    d = degree(m)
    return tuple(r[i] if i < len(r) else Fraction(0) for i in range(d))


def monic(p):
    if not p:
        return ()
    return scale(p, 1 / p[-1])


def gcd_monic(a, b):
    a, b = normalize(a), normalize(b)
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, r
    return monic(a)


def egcd(a, b):
    """Extended gcd in Q[x]: returns (g, u, v) with u*a + v*b = g."""
    r0, r1 = normalize(a), normalize(b)
    u0, u1 = (Fraction(1),), ()
    v0, v1 = (), (Fraction(1),)
    while r1:
        q, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, sub(u0, mul(q, u1))
        v0, v1 = v1, sub(v0, mul(q, v1))
    return r0, u0, v0


def derivative(p):
    return normalize(p[i] * i for i in range(1, len(p)))


def evaluate(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def is_squarefree(p) -> bool:
    return degree(gcd_monic(p, derivative(p))) <= 0


@functools.lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    if m < 1:
        raise ValueError("phi needs m >= 1")
    result = m
    n = m
    p = 2
    while p * p <= n:
        if n % p == 0:
            result -= result // p
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        result -= result // n
    return result


@functools.lru_cache(maxsize=None)
def cyclotomic(m: int) -> tuple[Fraction, ...]:
    """The m-th cyclotomic polynomial (integer coefficients as Fractions)."""
    if m < 1:
        raise ValueError("cyclotomic needs m >= 1")
    # x^m - 1 divided by the cyclotomic polynomials of the proper divisors.
    p = normalize([-1] + [0] * (m - 1) + [1])
    for d in range(1, m):
        if m % d == 0:
            p, r = divmod_poly(p, cyclotomic(d))
            assert not r
    return p


def torsion_order_candidates(d: int):
    """All m with phi(m) == d; complete since phi(m) >= sqrt(m/2)
    forces m <= 2*d*d."""
    return [m for m in range(1, 2 * d * d + 1) if euler_phi(m) == d]


def primes(count: int) -> list[int]:
    out = []
    n = 2
    while len(out) < count:
        if all(n % p for p in out if p * p <= n):
            out.append(n)
        n += 1
    return out


# --- arithmetic in F_p[x]; polynomials as tuples of ints in [0, p) ---


def fp_normalize(coeffs, p):
    cs = [int(c) % p for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def fp_from_q(poly, p):
    """Reduce a rational polynomial mod p; denominators must be units mod p."""
    out = []
    for c in poly:
        den = c.denominator % p
        if den == 0:
            raise ValueError("denominator divisible by p")
        out.append(c.numerator * pow(den, -1, p))
    return fp_normalize(out, p)


def fp_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return fp_normalize(out, p)


def fp_rem(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        if a[-1] % p == 0:
            a.pop()
            continue
        factor = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for j, cm in enumerate(m):
            a[shift + j] = (a[shift + j] - factor * cm) % p
        a.pop()
    return fp_normalize(a, p)


def fp_gcd(a, b, p):
    a, b = fp_normalize(a, p), fp_normalize(b, p)
    while b:
        a, b = b, fp_rem(a, b, p)
    if a:
        a = fp_mul(a, (pow(a[-1], -1, p),), p)
    return a


def fp_powmod(base, e, m, p):
    result = (1,)
    base = fp_rem(base, m, p)
    while e:
        if e & 1:
            result = fp_rem(fp_mul(result, base, p), m, p)
        base = fp_rem(fp_mul(base, base, p), m, p)
        e >>= 1
    return result


def fp_derivative(a, p):
    return fp_normalize([a[i] * i for i in range(1, len(a))], p)


def fp_is_irreducible(f, p) -> bool:
    """Rabin's test: f irreducible over F_p iff x^(p^n) == x mod f and
    gcd(x^(p^(n/q)) - x, f) = 1 for every prime q | n."""
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    x = (0, 1)
    # prime divisors of n
    qs = []
    nn = n
    q = 2
    while q * q <= nn:
        if nn % q == 0:
            qs.append(q)
            while nn % q == 0:
                nn //= q
        q += 1
    if nn > 1:
        qs.append(nn)
    # frob[k] = x^(p^k) mod f, built by repeated Frobenius
    frob = x
    powers = {0: x}
    for k in range(1, n + 1):
        frob = fp_powmod(frob, p, f, p)
        powers[k] = frob
    if powers[n] != fp_rem(x, f, p):
        return False
    for q in qs:
        h = fp_normalize(
            [
                (powers[n // q][i] if i < len(powers[n // q]) else 0)
                - (x[i] if i < len(x) else 0)
                for i in range(max(len(powers[n // q]), 2))
            ],
            p,
        )
        if fp_gcd(h, f, p) != (1,):
            return False
    return True
