"""Newton polygons, their partial order, enumeration and cutoff bounds.

A Newton polygon is the graph of a convex piecewise-linear function from
(0, 0) to (r, d) whose slopes are rationals in [0, 1], strictly increasing
from segment to segment, with lattice breakpoints.  It is stored as exact
(slope, multiplicity) pairs; no floating point anywhere.

The polygon of a module is computed by linearization: phi^deg is a
genuinely linear map (sigma^deg = 1), the valuations of its eigenvalues
are read off the lower hull of its characteristic polynomial's coefficient
valuations, and dividing by deg gives the slopes of phi itself.  This is
exact whenever the working precision exceeds deg * d, since every hull
vertex then sits strictly below the precision ceiling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import dieudonne, kernel
from .errors import EndpointMismatch, MalformedInput, PrecisionExhausted


@dataclass(frozen=True)
class NewtonPolygon:
    """Slope segments (slope, multiplicity), slopes strictly increasing."""

    segments: tuple[tuple[Fraction, int], ...]

    def __post_init__(self):
        if not self.segments:
            raise MalformedInput("polygon needs at least one segment")
        prev = None
        for slope, mult in self.segments:
            if not isinstance(slope, Fraction):
                raise MalformedInput("slopes must be Fractions")
            if slope < 0 or slope > 1:
                raise MalformedInput(f"slope {slope} outside [0, 1]")
            if mult < 1:
                raise MalformedInput("multiplicities must be positive")
            if mult % slope.denominator:
                raise MalformedInput(
                    f"multiplicity {mult} not divisible by denominator of {slope}")
            if prev is not None and slope <= prev:
                raise MalformedInput("slopes must strictly increase")
            prev = slope

    @property
    def rank(self) -> int:
        return sum(m for _, m in self.segments)

    @property
    def total_rise(self) -> int:
        rise = sum(s * m for s, m in self.segments)
        return int(rise)

    def evaluate(self, t) -> Fraction:
        """Value of the polygon at t in [0, rank]."""
        t = Fraction(t)
        if t < 0 or t > self.rank:
            raise MalformedInput(f"{t} outside [0, {self.rank}]")
        x = Fraction(0)
        y = Fraction(0)
        for slope, mult in self.segments:
            if t <= x + mult:
                return y + slope * (t - x)
            x += mult
            y += slope * mult
        return y

    def breakpoints(self) -> tuple[tuple[int, int], ...]:
        """Vertices (x, y) including both endpoints; all lattice points."""
        pts = [(0, 0)]
        x, y = Fraction(0), Fraction(0)
        for slope, mult in self.segments:
            x += mult
            y += slope * mult
            pts.append((int(x), int(y)))
        return tuple(pts)

    def reflect(self) -> "NewtonPolygon":
        """Slopes mapped to 1 - slope, order reversed (Cartier duality)."""
        return NewtonPolygon(tuple((1 - s, m) for s, m in reversed(self.segments)))

    def __str__(self):
        return " + ".join(f"{s} x{m}" for s, m in self.segments)


def np_from_points(points) -> NewtonPolygon:
    """Lower convex hull of finitely many valuation points.

    `points` is an iterable of (i, v) with v an integer or None for
    "infinite at this precision"; infinite points never constrain the
    hull.  Requires (0, 0) among the points and a finite value at the
    largest abscissa.
    """
    finite = {}
    max_i = 0
    for i, v in points:
        i = int(i)
        if i < 0:
            raise MalformedInput("abscissae must be nonnegative")
        max_i = max(max_i, i)
        if v is None:
            continue
        if i in finite:
            raise MalformedInput(f"duplicate abscissa {i}")
        finite[i] = int(v)
    if finite.get(0) != 0:
        raise MalformedInput("hull must start at (0, 0)")
    if max_i == 0 or max_i not in finite:
        raise MalformedInput("hull needs a finite point at the last abscissa")
    segments = _lower_hull_segments(sorted(finite.items()))
    return NewtonPolygon(tuple(segments))


def _lower_hull_segments(pts):
    """Monotone-chain lower hull of sorted integer points, as segments."""
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] if it lies on or above the chord hull[-2] -> pt
            if (y2 - y1) * (pt[0] - x2) >= (pt[1] - y2) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    segments = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slope = Fraction(y2 - y1, x2 - x1)
        if segments and segments[-1][0] == slope:
            segments[-1] = (slope, segments[-1][1] + (x2 - x1))
        else:
            segments.append((slope, x2 - x1))
    return segments


def np_of_module(module: dieudonne.DieudonneModule) -> NewtonPolygon:
    """Exact Newton polygon of the module's isocrystal.

    Linearize (B = matrix of phi^deg), take the hull of the characteristic
    polynomial's coefficient valuations, divide the slopes by deg.  Needs
    N > deg * d so that every true hull vertex is resolved.
    """
    ring = module.ring
    deg = ring.params.deg
    n = ring.params.precision
    if n <= deg * module.dim:
        raise PrecisionExhausted(
            f"precision {n} too small: need > deg*dim = {deg * module.dim}")
    b = kernel.phi_power(ring, module.phi, deg) if deg > 1 else module.phi
    coeffs = kernel.charpoly(ring, b)
    r = module.rank
    pts = []
    for i, c in enumerate(coeffs):
        v = c.valuation()
        pts.append((i, v if v < n else None))
    if pts[r][1] is None:
        raise PrecisionExhausted("constant coefficient vanished at precision")
    raw = _lower_hull_segments(sorted((i, v) for i, v in pts if v is not None))
    try:
        return NewtonPolygon(tuple((s / deg, m) for s, m in raw))
    except MalformedInput as exc:
        raise PrecisionExhausted(f"hull is not a valid polygon: {exc}") from exc


EQUAL = "equal"
STRICTLY_ABOVE = "strictly_above"
STRICTLY_BELOW = "strictly_below"
INCOMPARABLE = "incomparable"


def np_compare(n1: NewtonPolygon, n2: NewtonPolygon) -> str:
    """Partial-order comparison of two polygons with the same endpoints.

    "n1 lies above n2" means n1(t) >= n2(t) for all t, and "strictly" adds
    n1 != n2; since both functions are piecewise linear it suffices to
    compare at the union of their breakpoints.  Returns one of "equal",
    "strictly_above", "strictly_below", "incomparable".
    """
    if (n1.rank, n1.total_rise) != (n2.rank, n2.total_rise):
        raise EndpointMismatch(
            f"({n1.rank},{n1.total_rise}) vs ({n2.rank},{n2.total_rise})")
    if n1.segments == n2.segments:
        return EQUAL
    xs = sorted({x for x, _ in n1.breakpoints()} | {x for x, _ in n2.breakpoints()})
    above = below = False
    for x in xs:
        d = n1.evaluate(x) - n2.evaluate(x)
        if d > 0:
            above = True
        elif d < 0:
            below = True
    if above and below:
        return INCOMPARABLE
    return STRICTLY_ABOVE if above else STRICTLY_BELOW


def lies_above(n1: NewtonPolygon, n2: NewtonPolygon) -> bool:
    """Non-strict order: n1(t) >= n2(t) everywhere."""
    return np_compare(n1, n2) in (EQUAL, STRICTLY_ABOVE)


def np_to_simple_blocks(np_: NewtonPolygon) -> tuple[tuple[int, int], ...]:
    """Coprime (c_i, d_i) blocks, ordered by slope.

    A segment of slope a/b (lowest terms) and multiplicity k*b expands to
    k copies of the block (b - a, a).
    """
    blocks = []
    for slope, mult in np_.segments:
        a, b = slope.numerator, slope.denominator
        blocks.extend([(b - a, a)] * (mult // b))
    return tuple(blocks)


def np_from_blocks(blocks) -> NewtonPolygon:
    """Rebuild a polygon from coprime blocks (inverse of np_to_simple_blocks)."""
    groups: dict[Fraction, int] = {}
    for c_i, d_i in blocks:
        r_i = c_i + d_i
        if r_i < 1:
            raise MalformedInput("blocks must have positive rank")
        slope = Fraction(d_i, r_i)
        groups[slope] = groups.get(slope, 0) + r_i
    return NewtonPolygon(tuple(sorted(groups.items())))


def np_enumerate(c: int, d: int) -> list[NewtonPolygon]:
    """All Newton polygons from (0, 0) to (c+d, d) with slopes in [0, 1].

    Enumerated as multisets of coprime blocks (c_i, d_i) with sum (c, d),
    which makes np_to_simple_blocks the canonical form.  Sorted by the
    lexicographic order on the value tuples (N(0), ..., N(r)), a linear
    extension of the partial order.
    """
    if c < 0 or d < 0 or c + d < 1:
        raise MalformedInput("need c, d >= 0 and c + d >= 1")
    pairs = [(a, b) for a in range(c + 1) for b in range(d + 1)
             if a + b >= 1 and gcd(a, b) == 1]
    results: list[NewtonPolygon] = []

    def extend(idx: int, rem_c: int, rem_d: int, chosen: list):
        if rem_c == 0 and rem_d == 0:
            results.append(np_from_blocks(chosen))
            return
        if idx == len(pairs):
            return
        a, b = pairs[idx]
        max_count = min(rem_c // a if a else rem_c + rem_d,
                        rem_d // b if b else rem_c + rem_d)
        for count in range(max_count + 1):
            extend(idx + 1, rem_c - count * a, rem_d - count * b,
                   chosen + [(a, b)] * count)

    extend(0, c, d, [])
    results.sort(key=lambda poly: tuple(poly.evaluate(i)
                                        for i in range(poly.rank + 1)))
    return results


@dataclass(frozen=True)
class CutoffBounds:
    """The derived integer bounds attached to a codimension/dimension pair.

    isogeny_cutoff is ceil(c*d / (c+d)): the smallest level at which the
    p-power torsion determines the isogeny class.  isomorphism_bound is
    the classical c*d + 1 bound for the isomorphism class.  For an
    isosimple group of coprime (c, d) the minimal isogeny height is at
    most ceil((c-1)(d-1)/(c+d)), which then equals isogeny_cutoff - 1.
    """

    c: int
    d: int
    rank: int
    isogeny_cutoff: int
    isomorphism_bound: int
    isosimple_height_bound: int

    def __post_init__(self):
        if self.c >= 1 and self.d >= 1 and self.isogeny_cutoff < 1:
            raise MalformedInput("cutoff must be >= 1 for c, d >= 1")
        if gcd(self.c, self.d) == 1:
            if self.isosimple_height_bound != self.isogeny_cutoff - 1:
                raise MalformedInput(
                    "height bound must equal cutoff - 1 for coprime (c, d)")


def bounds(c: int, d: int) -> CutoffBounds:
    if c < 1 or d < 1:
        raise MalformedInput("need c, d >= 1")
    r = c + d
    return CutoffBounds(
        c=c, d=d, rank=r,
        isogeny_cutoff=-((-c * d) // r),
        isomorphism_bound=c * d + 1,
        isosimple_height_bound=-((-(c - 1) * (d - 1)) // r),
    )


# -- serialization ---------------------------------------------------------


def polygon_to_json(np_: NewtonPolygon) -> dict:
    return {"segments": [{"slope": str(s), "mult": m} for s, m in np_.segments]}


def polygon_from_json(data: dict) -> NewtonPolygon:
    try:
        segments = tuple((Fraction(seg["slope"]), int(seg["mult"]))
                         for seg in data["segments"])
    except MalformedInput:
        raise
    except Exception as exc:
        raise MalformedInput(f"bad polygon JSON: {exc}") from exc
    return NewtonPolygon(segments)
