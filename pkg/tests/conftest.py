import pytest

from dvg.prng import XorShift64Star
from dvg.wittring import make_ring


@pytest.fixture
def z256():
    """Z/2^8, the simplest coefficient ring."""
    return make_ring(2, 1, 8)


@pytest.fixture
def w9():
    """W(GF(9)) / 3^4."""
    return make_ring(3, 2, 4)


@pytest.fixture
def rng():
    return XorShift64Star(0xDECAFBAD)


def random_unit_matrix(ring, r, rng):
    """Random matrix with unit determinant (rejection sampling)."""
    from dvg.dieudonne import mat_inverse
    from dvg.errors import NotInvertible
    while True:
        u = tuple(tuple(ring.random_elem(rng) for _ in range(r)) for _ in range(r))
        try:
            mat_inverse(ring, u)
        except NotInvertible:
            continue
        return u
