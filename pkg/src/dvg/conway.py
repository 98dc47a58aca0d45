"""Defining polynomials for the residue fields GF(p^deg).

The table below holds Conway polynomials for p <= 7, deg <= 8, as ascending
coefficient tuples over GF(p) (constant term first, leading 1 last).  They
are the standard cross-system choice, so rings built by different software
from the same (p, deg) agree coefficient-by-coefficient.

Outside the table we fall back to the lexicographically least monic
irreducible polynomial, where candidates x^deg + a_{deg-1} x^{deg-1} + ...
+ a_0 are ordered by the integer a_0 + a_1 p + ... + a_{deg-1} p^{deg-1}.
"""

from __future__ import annotations

from . import fppoly

CONWAY_POLYNOMIALS: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (3, 7): (1, 0, 2, 0, 0, 0, 0, 1),
    (3, 8): (2, 2, 2, 0, 1, 2, 0, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (5, 5): (3, 4, 0, 0, 0, 1),
    (5, 6): (2, 0, 1, 4, 1, 0, 1),
    (5, 7): (3, 3, 0, 0, 0, 0, 0, 1),
    (5, 8): (2, 4, 3, 0, 1, 0, 0, 0, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (7, 4): (3, 4, 5, 0, 1),
    (7, 5): (4, 1, 0, 0, 0, 1),
    (7, 6): (3, 6, 4, 5, 1, 0, 1),
    (7, 7): (4, 6, 0, 0, 0, 0, 0, 1),
    (7, 8): (3, 2, 6, 4, 0, 0, 0, 0, 1),
}


def defining_polynomial(p: int, deg: int) -> tuple[int, ...]:
    """Monic degree-deg polynomial over GF(p), irreducible mod p.

    Conway polynomial when tabulated, lex-least irreducible otherwise.
    """
    poly = CONWAY_POLYNOMIALS.get((p, deg))
    if poly is not None:
        return poly
    for k in range(p ** deg):
        coeffs = []
        kk = k
        for _ in range(deg):
            coeffs.append(kk % p)
            kk //= p
        f = tuple(coeffs) + (1,)
        if fppoly.is_irreducible(f, p):
            return f
    raise RuntimeError(f"no irreducible polynomial of degree {deg} over GF({p})")
