"""Independent brute-force oracles used to pin expected values.

Everything here is deliberately naive and separate from the library code
paths it checks: determinants by minor expansion, Smith valuations via
determinant divisors, polygon counts by direct convex lattice-path search.
"""

from fractions import Fraction
from itertools import combinations


def det_minor_expansion(ring, matrix):
    """Determinant by first-column minor expansion (exponential; r <= 5)."""
    r = len(matrix)
    if r == 1:
        return matrix[0][0]
    acc = None
    for i in range(r):
        entry = matrix[i][0]
        if entry.is_zero():
            continue
        minor = [[matrix[a][b] for b in range(1, r)] for a in range(r) if a != i]
        term = entry * det_minor_expansion(ring, minor)
        if i % 2:
            term = -term
        acc = term if acc is None else acc + term
    return acc if acc is not None else ring.zero()


def charpoly_minor_expansion(ring, matrix):
    """det(t*I - A) over R[t] by minor expansion; coefficients monic first.

    Polynomials in t are lists of ring elements, constant term first.
    """
    r = len(matrix)

    def padd(f, g):
        n = max(len(f), len(g))
        f = f + [ring.zero()] * (n - len(f))
        g = g + [ring.zero()] * (n - len(g))
        return [a + b for a, b in zip(f, g)]

    def pmul(f, g):
        out = [ring.zero()] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            for j, b in enumerate(g):
                out[i + j] = out[i + j] + a * b
        return out

    def pneg(f):
        return [-a for a in f]

    def pdet(mat):
        n = len(mat)
        if n == 1:
            return mat[0][0]
        acc = [ring.zero()]
        for i in range(n):
            minor = [[mat[a][b] for b in range(1, n)] for a in range(n) if a != i]
            term = pmul(mat[i][0], pdet(minor))
            acc = padd(acc, pneg(term) if i % 2 else term)
        return acc

    tmat = [[[(-matrix[i][j]), ring.one()] if i == j else [-matrix[i][j]]
             for j in range(r)] for i in range(r)]
    poly = pdet(tmat)
    poly = poly + [ring.zero()] * (r + 1 - len(poly))
    return tuple(reversed(poly))


def smith_valuations_by_minors(ring, matrix):
    """Smith valuations from determinant divisors: v_k = d_k - d_(k-1),
    where d_k is the minimal valuation of a k x k minor.

    Once a divisor reaches the precision cap the remaining elementary
    divisors cannot be recovered from minors (their product has overflowed
    p^N even when they have not), so those positions are reported as None
    and a comparison should skip them.
    """
    n = ring.params.precision
    r = len(matrix)
    divisors = []
    for k in range(1, r + 1):
        best = n
        for rows in combinations(range(r), k):
            for cols in combinations(range(r), k):
                sub = [[matrix[i][j] for j in cols] for i in rows]
                v = det_minor_expansion(ring, sub).valuation()
                best = min(best, v)
        divisors.append(best)
    vals = []
    prev = 0
    for d_k in divisors:
        if d_k >= n:
            vals.append(None)
            continue
        vals.append(d_k - prev)
        prev = d_k
    return tuple(vals)


def count_convex_lattice_paths(c, d):
    """Number of convex lattice vertex-paths (0,0) -> (c+d, d) with slopes
    in [0, 1] strictly increasing between consecutive vertices."""
    r = c + d

    def walk(x0, y0, last_slope):
        if (x0, y0) == (r, d):
            return 1
        total = 0
        for x in range(x0 + 1, r + 1):
            for y in range(y0, d + 1):
                slope = Fraction(y - y0, x - x0)
                if slope > 1:
                    continue
                if last_slope is not None and slope <= last_slope:
                    continue
                total += walk(x, y, slope)
        return total

    return walk(0, 0, None)


def polygon_value_table(poly):
    """Values of a polygon at the integers 0..rank, as exact fractions."""
    return tuple(poly.evaluate(i) for i in range(poly.rank + 1))
