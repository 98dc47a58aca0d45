"""Exact arithmetic in W(GF(p^deg)) / p^N with its Frobenius automorphism.

The truncated Witt ring of a finite field is ring-isomorphic to the
unramified quotient (Z/p^N)[x] / (f(x)) for any monic lift f of an
irreducible polynomial over GF(p).  Elements are stored in the power basis
1, x, ..., x^(deg-1) as tuples of integers reduced mod p^N; this is much
cheaper than genuine Witt coordinates and loses nothing at flat precision.

Every element of a ring carries the same precision N.  The Frobenius sigma
is the unique ring automorphism sending the generator to the root of f
congruent to x^p mod p; it is computed once per ring by Newton iteration
and stored as deg linear maps (one per power of sigma).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import conway, fppoly
from .errors import HenselFailure, NotAUnit, NotPrime, PrecisionExhausted, RingMismatch


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    q = 3
    while q * q <= n:
        if n % q == 0:
            return False
        q += 2
    return True


@dataclass(frozen=True)
class RingParams:
    """Characteristic p, residue degree and flat working precision."""

    p: int
    deg: int
    precision: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")
        if self.deg < 1:
            raise ValueError("deg must be >= 1")
        if self.precision < 1:
            raise ValueError("precision must be >= 1")


class WittElem:
    """Element of a WittRing, as its power-basis coefficient tuple."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: "WittRing", coeffs: tuple[int, ...]):
        self.ring = ring
        self.coeffs = coeffs

    def _check(self, other: "WittElem") -> None:
        if self.ring is not other.ring and self.ring != other.ring:
            raise RingMismatch("operands live in different rings")

    def __add__(self, other: "WittElem") -> "WittElem":
        self._check(other)
        m = self.ring.modulus
        return WittElem(self.ring, tuple((a + b) % m for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "WittElem") -> "WittElem":
        self._check(other)
        m = self.ring.modulus
        return WittElem(self.ring, tuple((a - b) % m for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "WittElem":
        m = self.ring.modulus
        return WittElem(self.ring, tuple((-a) % m for a in self.coeffs))

    def __mul__(self, other: "WittElem") -> "WittElem":
        self._check(other)
        ring = self.ring
        deg, m = ring.params.deg, ring.modulus
        a, b = self.coeffs, other.coeffs
        if deg == 1:
            return WittElem(ring, ((a[0] * b[0]) % m,))
        conv = [0] * (2 * deg - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] = (conv[i + j] + ai * bj) % m
        out = conv[:deg]
        for k in range(2 * deg - 2, deg - 1, -1):
            ck = conv[k]
            if ck:
                red = ring._xred[k - deg]
                for i in range(deg):
                    out[i] = (out[i] + ck * red[i]) % m
        return WittElem(ring, tuple(out))

    def __pow__(self, e: int) -> "WittElem":
        if e < 0:
            return self.inverse() ** (-e)
        result = self.ring.one()
        base = self
        while e > 0:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (isinstance(other, WittElem) and self.ring == other.ring
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ring.params, self.coeffs))

    def __repr__(self):
        return f"WittElem({list(self.coeffs)})"

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def valuation(self) -> int:
        """Largest e <= N with self in p^e * ring; N means zero at precision N."""
        ring = self.ring
        if self.is_zero():
            return ring.params.precision
        p = ring.params.p
        v = min(_int_valuation(c, p, ring.params.precision) for c in self.coeffs if c)
        return v

    def frobenius(self, power: int = 1) -> "WittElem":
        """sigma^power applied to this element (negative powers allowed)."""
        ring = self.ring
        k = power % ring.params.deg
        if k == 0:
            return self
        mat = ring._sigma_pows[k]
        m = ring.modulus
        out = []
        for i in range(ring.params.deg):
            acc = 0
            row = mat[i]
            for j, cj in enumerate(self.coeffs):
                if cj:
                    acc = (acc + row[j] * cj) % m
            out.append(acc)
        return WittElem(ring, tuple(out))

    def inverse(self) -> "WittElem":
        """Exact inverse mod p^N; the element must be a unit.

        Inverts in the residue field, then Newton-lifts b <- b(2 - ab),
        doubling the number of correct digits each round.
        """
        ring = self.ring
        if self.valuation() != 0:
            raise NotAUnit("element has positive valuation")
        p = ring.params.p
        fbar = ring._fbar
        abar = fppoly.trim(tuple(c % p for c in self.coeffs))
        g, u, _ = fppoly.xgcd(abar, fbar, p)
        if g != (1,):
            raise HenselFailure("residue not invertible despite zero valuation")
        b = ring.elem(tuple(u[i] if i < len(u) else 0 for i in range(ring.params.deg)))
        two = ring.from_int(2)
        prec = 1
        while prec < ring.params.precision:
            b = b * (two - self * b)
            prec *= 2
        return b

    def divide_exact(self, p_power: int) -> "WittElem":
        """Divide by p^p_power; every coefficient must be divisible."""
        if p_power == 0:
            return self
        ring = self.ring
        q = ring.params.p ** p_power
        if any(c % q for c in self.coeffs):
            raise PrecisionExhausted(f"element is not divisible by p^{p_power}")
        return WittElem(ring, tuple(c // q for c in self.coeffs))


def _int_valuation(c: int, p: int, cap: int) -> int:
    v = 0
    while v < cap and c % p == 0:
        c //= p
        v += 1
    return v


class WittRing:
    """The quotient (Z/p^N)[x]/(f) with its Frobenius automorphism."""

    def __init__(self, params: RingParams, defining_poly: tuple[int, ...] | None = None):
        self.params = params
        self.modulus = params.p ** params.precision
        if defining_poly is None:
            defining_poly = conway.defining_polynomial(params.p, params.deg)
        defining_poly = tuple(c % self.modulus for c in defining_poly)
        if len(defining_poly) != params.deg + 1 or defining_poly[-1] != 1:
            raise ValueError("defining polynomial must be monic of degree deg")
        fbar = fppoly.trim(tuple(c % params.p for c in defining_poly))
        if not fppoly.is_irreducible(fbar, params.p):
            raise ValueError("defining polynomial is not irreducible mod p")
        self.defining_poly = defining_poly
        self._fbar = fbar
        self._xred = self._reduction_table()
        self.frobenius_image = self._lift_frobenius()
        self._sigma_pows = self._sigma_tables()

    # -- construction helpers -------------------------------------------

    def _reduction_table(self):
        """x^(deg+k) mod f for k = 0..deg-2, as coefficient tuples."""
        deg, m = self.params.deg, self.modulus
        rows = []
        # x^deg = -(f - x^deg)
        cur = [(-c) % m for c in self.defining_poly[:deg]]
        rows.append(tuple(cur))
        for _ in range(deg - 2):
            top = cur[deg - 1]
            cur = [0] + cur[:deg - 1]
            if top:
                base = rows[0]
                for i in range(deg):
                    cur[i] = (cur[i] + top * base[i]) % m
            rows.append(tuple(cur))
        return tuple(rows)

    def _lift_frobenius(self) -> WittElem:
        """Root of f congruent to x^p mod p, by Newton iteration.

        f is separable mod p, so f'(y0) is a unit and each step doubles the
        precision of the root.
        """
        if self.params.deg == 1:
            return self.generator()
        y = self.generator() ** self.params.p
        deriv = tuple((i * c) % self.modulus for i, c in enumerate(self.defining_poly))[1:]
        for _ in range(self.params.precision.bit_length() + 2):
            fy = self._eval_poly(self.defining_poly, y)
            if fy.is_zero():
                return y
            y = y - fy * self._eval_poly(deriv, y).inverse()
        if self._eval_poly(self.defining_poly, y).is_zero():
            return y
        raise HenselFailure("Frobenius lift did not converge")

    def _eval_poly(self, coeffs, point: WittElem) -> WittElem:
        acc = self.zero()
        for c in reversed(coeffs):
            acc = acc * point + self.from_int(c)
        return acc

    def _sigma_tables(self):
        """Matrix of sigma^k in the power basis, for k = 0..deg-1."""
        deg = self.params.deg
        tables = [tuple(tuple(1 if i == j else 0 for j in range(deg)) for i in range(deg))]
        g = self.generator()
        image = self.frobenius_image
        for _ in range(1, deg):
            g = self._apply_columns(image, g)
            cols = [self.one()]
            for _ in range(1, deg):
                cols.append(cols[-1] * g)
            tables.append(tuple(tuple(cols[j].coeffs[i] for j in range(deg))
                                for i in range(deg)))
        # sanity: sigma has order deg on the generator
        g = self._apply_columns(image, g)
        if g != self.generator():
            raise HenselFailure("Frobenius does not have order deg")
        return tuple(tables)

    def _apply_columns(self, image: WittElem, elem: WittElem) -> WittElem:
        """sigma(elem) given sigma(x) = image, before tables exist."""
        acc = self.zero()
        power = self.one()
        for c in elem.coeffs:
            acc = acc + power * self.from_int(c)
            power = power * image
        return acc

    # -- element constructors --------------------------------------------

    def elem(self, coeffs) -> WittElem:
        coeffs = tuple(int(c) % self.modulus for c in coeffs)
        if len(coeffs) != self.params.deg:
            raise ValueError(f"expected {self.params.deg} coefficients")
        return WittElem(self, coeffs)

    def zero(self) -> WittElem:
        return WittElem(self, (0,) * self.params.deg)

    def one(self) -> WittElem:
        return self.from_int(1)

    def from_int(self, n: int) -> WittElem:
        return WittElem(self, (n % self.modulus,) + (0,) * (self.params.deg - 1))

    def generator(self) -> WittElem:
        if self.params.deg == 1:
            # the residue field is GF(p); the generator is the root of the
            # degree-1 defining polynomial
            return WittElem(self, ((-self.defining_poly[0]) % self.modulus,))
        return WittElem(self, (0, 1) + (0,) * (self.params.deg - 2))

    def random_elem(self, rng) -> WittElem:
        return WittElem(self, tuple(rng.uniform(self.modulus)
                                    for _ in range(self.params.deg)))

    # -- ring identity ----------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, WittRing) and self.params == other.params
                and self.defining_poly == other.defining_poly)

    def __hash__(self):
        return hash((self.params, self.defining_poly))

    def __repr__(self):
        pr = self.params
        return f"WittRing(p={pr.p}, deg={pr.deg}, precision={pr.precision})"

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "p": self.params.p,
            "deg": self.params.deg,
            "precision": self.params.precision,
            "defining_poly": [str(c) for c in self.defining_poly],
        }


def make_ring(p: int, deg: int = 1, precision: int = 8,
              defining_poly: tuple[int, ...] | None = None) -> WittRing:
    """Build W(GF(p^deg)) / p^N.

    The defining polynomial defaults to the Conway polynomial for (p, deg)
    when tabulated (p <= 7, deg <= 8) and to the lexicographically least
    monic irreducible over GF(p) otherwise, lifted coefficient-wise.
    """
    return WittRing(RingParams(p, deg, precision), defining_poly)


def ring_from_json(data: dict) -> WittRing:
    from .errors import MalformedInput
    try:
        params = RingParams(int(data["p"]), int(data["deg"]), int(data["precision"]))
        poly = data.get("defining_poly")
        poly = tuple(int(c) for c in poly) if poly is not None else None
    except NotPrime:
        raise
    except Exception as exc:
        raise MalformedInput(f"bad ring JSON: {exc}") from exc
    return WittRing(params, poly)


def elem_to_json(a: WittElem) -> list[str]:
    return [str(c) for c in a.coeffs]


def elem_from_json(ring: WittRing, data) -> WittElem:
    from .errors import MalformedInput
    try:
        return ring.elem(tuple(int(c) for c in data))
    except (TypeError, ValueError) as exc:
        raise MalformedInput(f"bad element JSON: {exc}") from exc
