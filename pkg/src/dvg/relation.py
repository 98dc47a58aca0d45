"""Newton polygons from a cyclic vector's annihilating relation.

For a module with small a-number one can choose a vector x such that

    x, phi(x), ..., phi^(c-1)(x), theta(x), ..., theta^d(x)

is a basis (theta = Verschiebung).  Writing phi^c(x) in that basis gives a
relation  sum a_(c-i) phi^i (x) + sum b_l theta^l (x) = 0  with a_0 = 1,
and with a_(c+l) := p^l b_l the lower hull of the valuations
(i, v(a_i)) is the Newton polygon of the module.  This is an independent
route to the polygon, used to cross-check the linearization in
`newton.np_of_module`.

The a-number itself is r minus the mod-p rank of [A | V]: the images of
phi and theta mod p are the column spans of their matrices (sigma is
bijective), and rank is stable under base field extension.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import dieudonne, fppoly, newton
from .dieudonne import DieudonneModule
from .errors import CyclicVectorNotFound, DegenerateRelation, NotInvertible
from .newton import NewtonPolygon
from .prng import XorShift64Star
from .wittring import WittElem


@dataclass(frozen=True)
class CyclicVector:
    """A vector whose phi/theta orbit spans the module, with the basis
    matrix whose column k is the k-th orbit vector."""

    x: tuple[WittElem, ...]
    basis_matrix: tuple[tuple[WittElem, ...], ...]


@dataclass(frozen=True)
class RelationData:
    """Coefficients (a_0, ..., a_r) of the annihilating relation, their
    valuations (None = zero at working precision) and the derived polygon."""

    coeffs: tuple[WittElem, ...]
    valuations: tuple[int | None, ...]
    polygon: NewtonPolygon


def a_number(module: DieudonneModule) -> int:
    """dim of M / (phi(M) + theta(M)) over the residue field."""
    ring = module.ring
    p = ring.params.p
    fbar = ring._fbar
    v = dieudonne.verschiebung(module)
    r = module.rank
    cols = []
    for j in range(r):
        cols.append(tuple(fppoly.trim(tuple(c % p for c in module.phi[i][j].coeffs))
                          for i in range(r)))
    for j in range(r):
        cols.append(tuple(fppoly.trim(tuple(c % p for c in v[i][j].coeffs))
                          for i in range(r)))
    return r - _residue_rank(cols, fbar, p, r)


def _residue_rank(cols, fbar, p, r) -> int:
    """Rank over GF(p^deg) of the matrix with the given columns."""
    cols = [list(col) for col in cols]
    rank = 0
    for col in cols:
        pivot = next((i for i in range(rank, r) if col[i]), None)
        if pivot is None:
            continue
        if pivot != rank:
            for other in cols:
                other[rank], other[pivot] = other[pivot], other[rank]
        _, inv, _ = fppoly.xgcd(col[rank], fbar, p)
        for other in cols:
            if other is col or not other[rank]:
                continue
            q = fppoly.mod(fppoly.mul(other[rank], inv, p), fbar, p)
            for i in range(rank, r):
                other[i] = fppoly.mod(
                    fppoly.sub(other[i], fppoly.mul(q, col[i], p), p), fbar, p)
        rank += 1
        if rank == r:
            break
    return rank


def _mat_vec(matrix, vec):
    out = []
    for row in matrix:
        acc = row[0] * vec[0]
        for a, b in zip(row[1:], vec[1:]):
            acc = acc + a * b
        out.append(acc)
    return tuple(out)


def _vec_sigma(vec, k):
    return tuple(e.frobenius(k) for e in vec)


def _orbit(module: DieudonneModule, x):
    """Columns [x, phi x, ..., phi^(c-1) x, theta x, ..., theta^d x] plus
    the relation target phi^c(x)."""
    a = module.phi
    v = dieudonne.verschiebung(module)
    c, d = module.codim, module.dim
    cols = [tuple(x)]
    cur = tuple(x)
    for _ in range(c):
        cur = _mat_vec(a, _vec_sigma(cur, 1))
        cols.append(cur)
    target = cols.pop()          # phi^c(x); cols now hold phi^0..phi^(c-1)
    cur = tuple(x)
    for _ in range(d):
        cur = _mat_vec(v, _vec_sigma(cur, -1))
        cols.append(cur)
    return cols, target


def _solve_unit_system(ring, cols, target):
    """Solve sum_k y_k cols[k] = target; the columns must form a basis."""
    r = len(target)
    aug = [[cols[j][i] for j in range(len(cols))] + [target[i]] for i in range(r)]
    for col in range(r):
        pivot = next((i for i in range(col, r) if aug[i][col].valuation() == 0), None)
        if pivot is None:
            raise NotInvertible("basis matrix determinant is not a unit")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [e * inv for e in aug[col]]
        for i in range(r):
            if i != col and not aug[i][col].is_zero():
                q = aug[i][col]
                aug[i] = [e - q * f for e, f in zip(aug[i], aug[col])]
    return tuple(aug[i][-1] for i in range(r))


def find_cyclic_vector(module: DieudonneModule, budget: int,
                       seed: int = 0) -> CyclicVector:
    """Deterministic search for a cyclic vector.

    Tries the standard basis vectors first, then seeded pseudo-random
    vectors, spending at most `budget` candidates in total.  A candidate
    is accepted when its orbit matrix has unit determinant and the
    resulting relation has a unit trailing coefficient (the choice the
    polygon formula requires); raises CyclicVectorNotFound otherwise,
    which may simply mean bad luck over a small residue field.
    """
    ring = module.ring
    r = module.rank
    rng = XorShift64Star(seed)
    tried = 0
    idx = 0
    while tried < budget:
        if idx < r:
            x = tuple(ring.one() if i == idx else ring.zero() for i in range(r))
        else:
            x = tuple(ring.random_elem(rng) for _ in range(r))
        idx += 1
        tried += 1
        cols, target = _orbit(module, x)
        try:
            y = _solve_unit_system(ring, cols, target)
        except NotInvertible:
            continue
        if _trailing_valuation(module, y) != 0:
            continue
        basis = tuple(tuple(cols[j][i] for j in range(r)) for i in range(r))
        return CyclicVector(x=x, basis_matrix=basis)
    raise CyclicVectorNotFound(f"no cyclic vector within budget {budget}")


def _trailing_valuation(module: DieudonneModule, y) -> int:
    # v(b_d) for d >= 1; in the etale case the analogous unit condition
    # falls on the coefficient of x itself
    return y[-1].valuation() if module.dim >= 1 else y[0].valuation()


def relation_coefficients(module: DieudonneModule, cyc: CyclicVector) -> RelationData:
    """Coefficients (a_0, ..., a_r) of the annihilating relation of cyc.x.

    Normalized so a_0 = 1.  Raises DegenerateRelation when the trailing
    coefficient is not a unit (retry with another vector).
    """
    ring = module.ring
    n = ring.params.precision
    c, d = module.codim, module.dim
    r = module.rank
    cols, target = _orbit(module, cyc.x)
    try:
        y = _solve_unit_system(ring, cols, target)
    except NotInvertible as exc:
        raise DegenerateRelation("orbit matrix is not invertible") from exc
    if _trailing_valuation(module, y) != 0:
        raise DegenerateRelation("trailing relation coefficient is not a unit")
    coeffs = [ring.zero()] * (r + 1)
    coeffs[0] = ring.one()
    for i in range(c):
        coeffs[c - i] = -y[i]                      # coefficient of phi^i(x)
    p_power = ring.one()
    p_elem = ring.from_int(ring.params.p)
    for l in range(1, d + 1):
        p_power = p_power * p_elem
        coeffs[c + l] = -y[c - 1 + l] * p_power    # a_(c+l) = p^l b_l
    vals = []
    for a in coeffs:
        v = a.valuation()
        vals.append(v if v < n else None)
    polygon = newton.np_from_points([(i, v) for i, v in enumerate(vals)])
    return RelationData(coeffs=tuple(coeffs), valuations=tuple(vals),
                        polygon=polygon)


def newton_from_relation(data: RelationData) -> NewtonPolygon:
    """Polygon from the relation valuations (finite points only)."""
    return newton.np_from_points(list(enumerate(data.valuations)))


# -- serialization ---------------------------------------------------------


def relation_to_json(data: RelationData) -> dict:
    from .newton import polygon_to_json
    from .wittring import elem_to_json
    return {
        "valuations": ["inf" if v is None else v for v in data.valuations],
        "coeffs": [elem_to_json(a) for a in data.coeffs],
        "polygon": polygon_to_json(data.polygon),
    }
