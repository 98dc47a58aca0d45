"""Exception types shared across the package."""


class DvgError(Exception):
    """Base class for all errors raised by this package."""


class NotPrime(DvgError):
    """The characteristic passed to a ring constructor is not prime."""


class HenselFailure(DvgError):
    """Newton/Hensel iteration failed to converge (internal error)."""


class RingMismatch(DvgError):
    """Operands belong to different coefficient rings."""


class NotAUnit(DvgError):
    """Inversion requested for an element of positive valuation."""


class NotADieudonneModule(DvgError):
    """Matrix violates the integrality condition p*M <= phi(M), or the
    working precision is too small to certify it."""


class PrecisionExhausted(DvgError):
    """The flat working precision is insufficient for an exact answer."""


class NotInvertible(DvgError):
    """Determinant is not a unit."""


class MalformedInput(DvgError):
    """Input data violates a documented schema or precondition."""


class EndpointMismatch(DvgError):
    """Newton polygons with different endpoints cannot be compared."""


class CutoffTooSmall(DvgError):
    """The isogeny cutoff for (c, d) is 1, so no congruent witness pair
    with distinct Newton polygons exists."""


class DegenerateRelation(DvgError):
    """The annihilating relation for the chosen vector has a non-unit
    leading or trailing coefficient; retry with another vector."""


class CyclicVectorNotFound(DvgError):
    """Cyclic-vector search exhausted its budget."""
