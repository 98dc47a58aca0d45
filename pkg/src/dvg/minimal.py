"""Explicit module builders: simple minimal modules, their products, and
the congruent witness pair that makes the isogeny cutoff bound sharp.

All bases are 0-indexed.  The simple minimal module of bidegree (c_i, d_i)
acts on basis vectors by

    phi(e_l) = e_(d_i + l mod r)        for l < c_i,
    phi(e_l) = p * e_(d_i + l mod r)    for l >= c_i,

which has codimension c_i, dimension d_i and the single slope
d_i / (c_i + d_i) when the pair is coprime.  Products of these realize any
prescribed polygon, block-diagonally in slope order.

The witness pair exists whenever j = ceil(cd/r) >= 2: a single-slope base
module with phi(e_k) = e_(k+1) (unit for k < c, p otherwise, indices mod
r), and a twist replacing phi(e_(c-1)) by p^(j-1) e_0 + e_c.  The two
matrices agree mod p^(j-1) while their polygons differ: the twist's slopes
are (j-1)/c with multiplicity c and 1 - (j-1)/d with multiplicity d.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import newton
from .dieudonne import DieudonneModule, make_module
from .errors import CutoffTooSmall, MalformedInput
from .newton import NewtonPolygon
from .wittring import WittRing


def build_simple_minimal(ring: WittRing, c_i: int, d_i: int) -> DieudonneModule:
    """The simple minimal module of codimension c_i and dimension d_i.

    The defining basis action makes sense for any c_i, d_i >= 0 with
    positive rank, but the module is simple only for coprime pairs; a
    warning is emitted otherwise.
    """
    if c_i < 0 or d_i < 0 or c_i + d_i < 1:
        raise MalformedInput("need c_i, d_i >= 0 with c_i + d_i >= 1")
    if gcd(c_i, d_i) > 1:
        warnings.warn(f"({c_i}, {d_i}) is not coprime; the module is minimal "
                      "but not simple", stacklevel=2)
    r = c_i + d_i
    p_elem = ring.from_int(ring.params.p)
    one, zero = ring.one(), ring.zero()
    rows = [[zero] * r for _ in range(r)]
    for l in range(r):
        rows[(d_i + l) % r][l] = one if l < c_i else p_elem
    return make_module(ring, rows)


def build_minimal(ring: WittRing, np_: NewtonPolygon) -> DieudonneModule:
    """Block-diagonal product of simple minimal modules realizing np_."""
    blocks = newton.np_to_simple_blocks(np_)
    mods = [build_simple_minimal(ring, c_i, d_i) for c_i, d_i in blocks]
    r = sum(m.rank for m in mods)
    zero = ring.zero()
    rows = [[zero] * r for _ in range(r)]
    offset = 0
    for mod in mods:
        for i in range(mod.rank):
            for j in range(mod.rank):
                rows[offset + i][offset + j] = mod.phi[i][j]
        offset += mod.rank
    return make_module(ring, rows)


@dataclass(frozen=True)
class WitnessPair:
    """A base module and a twist congruent to it mod p^(cutoff - 1) whose
    Newton polygons nevertheless differ."""

    base: DieudonneModule
    twisted: DieudonneModule
    congruence_level: int
    expected_base_np: NewtonPolygon
    expected_twisted_np: NewtonPolygon


def build_traverso_witness(ring: WittRing, c: int, d: int) -> WitnessPair:
    """Witness that level j - 1 torsion does not determine the isogeny class.

    Requires j = ceil(cd / (c+d)) >= 2; for j = 1 the bound is trivially
    sharp and no such pair exists (CutoffTooSmall).
    """
    if c < 1 or d < 1:
        raise MalformedInput("need c, d >= 1")
    b = newton.bounds(c, d)
    j = b.isogeny_cutoff
    if j < 2:
        raise CutoffTooSmall(f"cutoff for ({c}, {d}) is {j}; no witness below level 1")
    r = c + d
    p = ring.params.p
    one, zero = ring.one(), ring.zero()
    p_elem = ring.from_int(p)
    base_rows = [[zero] * r for _ in range(r)]
    for k in range(r):
        base_rows[(k + 1) % r][k] = one if k < c else p_elem
    twisted_rows = [row[:] for row in base_rows]
    twisted_rows[0][c - 1] = ring.from_int(p ** (j - 1))
    base = make_module(ring, base_rows)
    twisted = make_module(ring, twisted_rows)
    expected_base = NewtonPolygon(((Fraction(d, r), r),))
    expected_twisted = NewtonPolygon((
        (Fraction(j - 1, c), c),
        (1 - Fraction(j - 1, d), d),
    ))
    return WitnessPair(base=base, twisted=twisted, congruence_level=j - 1,
                       expected_base_np=expected_base,
                       expected_twisted_np=expected_twisted)
