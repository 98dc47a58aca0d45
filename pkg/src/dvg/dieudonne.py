"""Free modules with a sigma-linear Frobenius over a truncated Witt ring.

A module is a rank-r free W-module M together with the matrix A of a
sigma-linear endomorphism phi in column convention:

    phi(e_j) = sum_i A[i][j] * e_i,   phi(x) = A . sigma(x) in coordinates.

Validity means p*M <= phi(M), equivalently every Smith valuation of A is 0
or 1; the number of zeros is the codimension c, the number of ones the
dimension d.  The Verschiebung is the sigma^(-1)-linear map with matrix
V = sigma^(-1)(p * A^(-1)), so that A.sigma(V) = V.sigma^(-1)(A) = p*I.

All values here are immutable; operations return new modules.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernel
from .errors import (MalformedInput, NotADieudonneModule, NotInvertible,
                     PrecisionExhausted, RingMismatch)
from .prng import XorShift64Star
from .wittring import WittElem, WittRing, elem_from_json, elem_to_json, ring_from_json

MODULE_CONVENTION = "column: phi(e_j) = sum_i phi[i][j] * e_i"


@dataclass(frozen=True)
class SmithData:
    """Diagonal valuations of a Smith normal form, nondecreasing."""

    valuations: tuple[int, ...]


@dataclass(frozen=True)
class DieudonneModule:
    ring: WittRing
    rank: int
    phi: tuple[tuple[WittElem, ...], ...]
    codim: int
    dim: int


def smith_valuations(ring: WittRing, matrix) -> SmithData:
    """Smith-form diagonal valuations over W/p^N (valuation N = zero)."""
    r = len(matrix)
    if any(len(row) != r for row in matrix):
        raise MalformedInput("matrix must be square")
    return SmithData(kernel.smith_valuations(ring, matrix))


def make_module(ring: WittRing, phi_matrix) -> DieudonneModule:
    """Validate the integrality condition and read off (c, d).

    Raises NotADieudonneModule when some Smith valuation exceeds 1, or when
    the precision cannot certify the condition (N = 1 cannot separate
    valuation 1 from "zero at precision").
    """
    phi = tuple(tuple(row) for row in phi_matrix)
    r = len(phi)
    if r < 1 or any(len(row) != r for row in phi):
        raise MalformedInput("phi matrix must be square and nonempty")
    for row in phi:
        for entry in row:
            if not isinstance(entry, WittElem):
                raise MalformedInput("phi entries must be ring elements")
            if entry.ring != ring:
                raise RingMismatch("phi entry from a different ring")
    if ring.params.precision < 2:
        raise NotADieudonneModule(
            "precision 1 cannot certify the integrality condition")
    vals = kernel.smith_valuations(ring, phi)
    if any(v > 1 for v in vals):
        raise NotADieudonneModule(
            f"Smith valuations {list(vals)} must all be 0 or 1")
    c = sum(1 for v in vals if v == 0)
    return DieudonneModule(ring=ring, rank=r, phi=phi, codim=c, dim=r - c)


def phi_power(module: DieudonneModule, n: int):
    """Matrix of phi^n: A . sigma(A) ... sigma^(n-1)(A)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return kernel.phi_power(module.ring, module.phi, n)


def verschiebung(module: DieudonneModule):
    """Matrix V of the Verschiebung, V = sigma^(-1)(p * A^(-1)).

    Computed division-free from the characteristic polynomial: by
    Cayley-Hamilton, A . (A^(r-1) + c_1 A^(r-2) + ... + c_(r-1) I) equals
    (-1)^(r+1) det(A) . I, and det(A) = p^d * unit, so dividing the Horner
    sum by unit and p^(d-1) (exact, by integrality) gives p * A^(-1).

    The result is canonical modulo p^(N-d); digits above that are an
    artifact of flat precision, which downstream consumers tolerate.
    """
    ring = module.ring
    d = module.dim
    if d >= ring.params.precision:
        raise PrecisionExhausted(f"need precision > dim = {d}")
    r = module.rank
    a = module.phi
    coeffs = kernel.charpoly(ring, a)
    det = coeffs[r] if r % 2 == 0 else -coeffs[r]
    if det.valuation() != d:
        raise NotADieudonneModule(
            "determinant valuation disagrees with the Smith data")
    unit = det.divide_exact(d)
    # Horner sum B0 = A^(r-1) + c_1 A^(r-2) + ... + c_(r-1) I
    b0 = _scaled_identity(ring, r, ring.one())
    for k in range(1, r):
        b0 = kernel.mat_mul(ring, b0, a)
        b0 = _mat_add_scalar_diag(ring, b0, coeffs[k])
    # A . B0 = (-1)^(r+1) det(A) . I, so flip the sign for even rank
    scale = -unit.inverse() if r % 2 == 0 else unit.inverse()
    if d == 0:
        p_elem = ring.from_int(ring.params.p)
        w = tuple(tuple(entry * scale * p_elem for entry in row) for row in b0)
    else:
        w = tuple(tuple((entry * scale).divide_exact(d - 1) for entry in row)
                  for row in b0)
    return kernel.mat_sigma(ring, w, -1)


def _scaled_identity(ring: WittRing, r: int, value: WittElem):
    zero = ring.zero()
    return tuple(tuple(value if i == j else zero for j in range(r)) for i in range(r))


def _mat_add_scalar_diag(ring: WittRing, matrix, value: WittElem):
    return tuple(tuple(matrix[i][j] + value if i == j else matrix[i][j]
                       for j in range(len(matrix)))
                 for i in range(len(matrix)))


def mat_inverse(ring: WittRing, matrix):
    """Inverse of a unit-determinant matrix by Gauss-Jordan elimination.

    Over a local ring a unit-determinant matrix always has a unit pivot in
    the remaining submatrix, so plain row reduction works.
    """
    r = len(matrix)
    m = [list(row) + [ring.one() if i == j else ring.zero() for j in range(r)]
         for i, row in enumerate(matrix)]
    for col in range(r):
        piv = next((i for i in range(col, r) if m[i][col].valuation() == 0), None)
        if piv is None:
            raise NotInvertible("matrix determinant is not a unit")
        m[col], m[piv] = m[piv], m[col]
        inv = m[col][col].inverse()
        m[col] = [x * inv for x in m[col]]
        for i in range(r):
            if i != col and not m[i][col].is_zero():
                q = m[i][col]
                m[i] = [x - q * y for x, y in zip(m[i], m[col])]
    return tuple(tuple(row[r:]) for row in m)


def change_basis(module: DieudonneModule, u) -> DieudonneModule:
    """Module in the basis e'_j = sum_i U[i][j] e_i: phi' = U^(-1).A.sigma(U)."""
    ring = module.ring
    u = tuple(tuple(row) for row in u)
    u_inv = mat_inverse(ring, u)
    new_phi = kernel.mat_mul(ring, kernel.mat_mul(ring, u_inv, module.phi),
                             kernel.mat_sigma(ring, u, 1))
    return make_module(ring, new_phi)


def perturb(module: DieudonneModule, level: int, seed: int):
    """Left-multiply phi by a seeded random G = I + p^level * E.

    E has entries uniform in the power-basis representation, drawn row by
    row (and coefficient by coefficient) from XorShift64Star(seed).  For a
    fixed seed the result is identical on every platform.  Returns the
    perturbed module together with G.
    """
    if level < 1:
        raise ValueError("perturbation level must be >= 1")
    ring = module.ring
    rng = XorShift64Star(seed)
    r = module.rank
    pt = ring.from_int(ring.params.p ** min(level, ring.params.precision))
    g = [[None] * r for _ in range(r)]
    for i in range(r):
        for j in range(r):
            e = ring.random_elem(rng)
            g[i][j] = (ring.one() if i == j else ring.zero()) + pt * e
    g = tuple(tuple(row) for row in g)
    new_phi = kernel.mat_mul(ring, g, module.phi)
    return make_module(ring, new_phi), g


def dual(module: DieudonneModule) -> DieudonneModule:
    """Dieudonne module of the Cartier dual; (c, d) becomes (d, c).

    On the dual basis the Frobenius acts through the Verschiebung of the
    original: the new matrix is sigma applied to V transposed.
    """
    ring = module.ring
    v = verschiebung(module)
    r = module.rank
    dual_phi = kernel.mat_sigma(
        ring, tuple(tuple(v[j][i] for j in range(r)) for i in range(r)), 1)
    out = make_module(ring, dual_phi)
    if (out.codim, out.dim) != (module.dim, module.codim):
        raise PrecisionExhausted("dual (c, d) mismatch: precision too small")
    return out


# -- serialization ---------------------------------------------------------


def module_to_json(module: DieudonneModule, provenance: str | None = None) -> dict:
    data = {
        "ring": module.ring.to_json(),
        "rank": module.rank,
        "convention": MODULE_CONVENTION,
        "phi": [[elem_to_json(e) for e in row] for row in module.phi],
    }
    if provenance is not None:
        data["provenance"] = provenance
    return data


def module_from_json(data: dict) -> DieudonneModule:
    try:
        ring = ring_from_json(data["ring"])
        rank = int(data["rank"])
        rows = data["phi"]
        if len(rows) != rank or any(len(row) != rank for row in rows):
            raise MalformedInput("phi shape does not match rank")
        phi = tuple(tuple(elem_from_json(ring, e) for e in row) for row in rows)
    except MalformedInput:
        raise
    except Exception as exc:
        raise MalformedInput(f"bad module JSON: {exc}") from exc
    return make_module(ring, phi)
