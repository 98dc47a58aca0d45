"""Polynomial arithmetic over GF(p).

Polynomials are tuples of ints in [0, p), lowest degree first, with no
trailing zeros (the zero polynomial is the empty tuple).  Only the small
routines needed elsewhere in the package are provided: ring operations,
division, gcd, modular exponentiation and an irreducibility test.
"""

from __future__ import annotations


def trim(coeffs) -> tuple[int, ...]:
    """Drop trailing zeros so the leading coefficient is nonzero."""
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def add(a, b, p):
    n = max(len(a), len(b))
    return trim(tuple(((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                      for i in range(n)))


def sub(a, b, p):
    n = max(len(a), len(b))
    return trim(tuple(((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                      for i in range(n)))


def mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return trim(out)


def divmod_poly(a, b, p):
    """Return (q, r) with a = q*b + r and deg r < deg b.  b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv_lead = pow(b[-1], -1, p)
    for i in range(len(a) - len(b), -1, -1):
        c = (r[i + len(b) - 1] * inv_lead) % p
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                r[i + j] = (r[i + j] - c * bj) % p
    return trim(q), trim(r)


def mod(a, b, p):
    return divmod_poly(a, b, p)[1]


def gcd(a, b, p):
    while b:
        a, b = b, mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = tuple((c * inv) % p for c in a)
    return a


def xgcd(a, b, p):
    """Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic."""
    r0, r1 = trim(a), trim(b)
    u0, u1 = (1,), ()
    v0, v1 = (), (1,)
    while r1:
        q, r = divmod_poly(r0, r1, p)
        r0, r1 = r1, r
        u0, u1 = u1, sub(u0, mul(q, u1, p), p)
        v0, v1 = v1, sub(v0, mul(q, v1, p), p)
    if r0:
        inv = pow(r0[-1], -1, p)
        scale = (inv,)
        r0, u0, v0 = mul(r0, scale, p), mul(u0, scale, p), mul(v0, scale, p)
    return r0, u0, v0


def powmod(a, e, m, p):
    """a**e mod m over GF(p), by square and multiply."""
    result = (1,)
    base = mod(a, m, p)
    while e > 0:
        if e & 1:
            result = mod(mul(result, base, p), m, p)
        base = mod(mul(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible(f, p) -> bool:
    """Test irreducibility of f over GF(p).

    Uses the standard criterion: x^(p^n) = x mod f, and for every prime
    divisor q of n, gcd(x^(p^(n/q)) - x, f) = 1.
    """
    f = trim(f)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = (0, 1)
    for q in _prime_divisors(n):
        t = powmod(x, p ** (n // q), f, p)
        if len(gcd(sub(t, x, p), f, p)) > 1:
            return False
    return powmod(x, p ** n, f, p) == x


def _prime_divisors(n):
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out
