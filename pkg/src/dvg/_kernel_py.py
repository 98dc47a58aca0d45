"""Pure-Python matrix kernels over a truncated Witt ring.

This is the portable implementation of the five hot operations behind the
perturbation experiments; `dvg._core` provides the same functions compiled
with Cython for rings whose modulus fits machine words.  Matrices are
tuples of tuples of WittElem, row-major, and are never mutated.

All algorithms are division-free or divide only by units / exact powers of
p, so every result is exact at the ring's flat precision:

* `charpoly` uses the Berkowitz vector recurrence (no divisions at all,
  valid over any commutative ring).
* `smith_valuations` eliminates with a global minimum-valuation pivot,
  which is exact over a chain ring like W/p^N: once the pivot has minimal
  valuation e, every quotient entry/pivot is integral and the update is
  error-free mod p^N.
"""

from __future__ import annotations

from .wittring import WittElem, WittRing


def mat_mul(ring: WittRing, a, b):
    r = len(a)
    bc = list(zip(*b))
    return tuple(tuple(_dot(a[i], bc[j]) for j in range(r)) for i in range(r))


def _dot(row, col):
    acc = row[0] * col[0]
    for x, y in zip(row[1:], col[1:]):
        acc = acc + x * y
    return acc


def mat_sigma(ring: WittRing, a, k: int):
    """Apply sigma^k to every entry."""
    k %= ring.params.deg
    if k == 0:
        return a
    return tuple(tuple(x.frobenius(k) for x in row) for row in a)


def phi_power(ring: WittRing, a, n: int):
    """Matrix of the n-th iterate of a sigma-linear map with matrix a.

    phi(x) = A.sigma(x) in coordinates, so phi^n has matrix
    A . sigma(A) . sigma^2(A) ... sigma^(n-1)(A).
    """
    out = a
    for k in range(1, n):
        out = mat_mul(ring, out, mat_sigma(ring, a, k))
    return out


def charpoly(ring: WittRing, a):
    """Coefficients of det(t*I - A), monic, highest degree first.

    Berkowitz recurrence: for the k-th leading principal submatrix
    [[M, S], [R, d]] the coefficient vector is the Toeplitz product of
    (1, -d, -R.S, -R.M.S, ..., -R.M^(k-2).S) with the previous vector.
    """
    r = len(a)
    one = ring.one()
    coeffs = (one,)
    for k in range(1, r + 1):
        d = a[k - 1][k - 1]
        toep = [one, -d]
        if k > 1:
            s = [a[i][k - 1] for i in range(k - 1)]
            row = [a[k - 1][j] for j in range(k - 1)]
            w = s
            for _ in range(k - 1):
                toep.append(-_vdot(row, w))
                w = [_vdot(a[i][:k - 1], w) for i in range(k - 1)]
        new = []
        for i in range(k + 1):
            acc = None
            for j in range(max(0, i - k), min(i, k - 1) + 1):
                term = toep[i - j] * coeffs[j]
                acc = term if acc is None else acc + term
            new.append(acc)
        coeffs = tuple(new)
    return coeffs


def _vdot(xs, ys):
    acc = xs[0] * ys[0]
    for x, y in zip(xs[1:], ys[1:]):
        acc = acc + x * y
    return acc


def smith_valuations(ring: WittRing, a):
    """Valuations of the Smith normal form diagonal, nondecreasing.

    Entries indistinguishable from zero at precision N are reported as N.
    """
    n = ring.params.precision
    p = ring.params.p
    r = len(a)
    m = [list(row) for row in a]
    vals = []
    for step in range(r):
        piv_v, piv_i, piv_j = n, -1, -1
        for i in range(step, r):
            for j in range(step, r):
                v = m[i][j].valuation()
                if v < piv_v:
                    piv_v, piv_i, piv_j = v, i, j
                    if v == (vals[-1] if vals else 0):
                        break
            else:
                continue
            break
        if piv_i < 0:
            vals.extend([n] * (r - step))
            break
        if piv_i != step:
            m[step], m[piv_i] = m[piv_i], m[step]
        if piv_j != step:
            for row in m:
                row[step], row[piv_j] = row[piv_j], row[step]
        e = piv_v
        unit = m[step][step].divide_exact(e)
        inv_u = unit.inverse()
        pe = p ** e
        for i in range(step + 1, r):
            b = m[i][step]
            if b.is_zero():
                continue
            q = b.divide_exact(e) * inv_u
            for j in range(step, r):
                m[i][j] = m[i][j] - q * m[step][j]
        # the remaining entries of row `step` are cleared by column
        # operations that touch no other row (column `step` is zero below
        # the pivot now), so just record the pivot
        vals.append(e)
    return tuple(vals)
