"""Kernel dispatch: compiled extension when usable, pure Python otherwise.

The compiled core (`dvg._core`, built from Cython) is selected at import
time when present.  It is used per-ring only when exact arithmetic fits
machine words:

* ring modulus p^N < 2^31 (so coefficient products fit in int64), and
* residue degree deg <= 8 (fixed-size scratch buffers).

Otherwise the pure-Python implementation in `dvg._kernel_py` runs; results
are identical, bit for bit.  `set_backend` forces one side, which the test
suite and the benchmark harness use to compare implementations.
"""

from __future__ import annotations

import numpy as np

from . import _kernel_py
from .wittring import WittElem, WittRing

try:
    from . import _core
except ImportError:
    _core = None

_INT64_SAFE_MODULUS = 1 << 31
_MAX_COMPILED_DEG = 8

_backend = "auto"


def has_compiled() -> bool:
    return _core is not None


def set_backend(name: str) -> None:
    """Force 'compiled' or 'pure', or restore 'auto' selection."""
    if name not in ("auto", "compiled", "pure"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "compiled" and _core is None:
        raise RuntimeError("compiled kernel is not available")
    global _backend
    _backend = name


def get_backend() -> str:
    return _backend


def _eligible(ring: WittRing) -> bool:
    return (ring.modulus < _INT64_SAFE_MODULUS
            and ring.params.deg <= _MAX_COMPILED_DEG)


def _use_compiled(ring: WittRing) -> bool:
    if _backend == "pure" or _core is None:
        return False
    if _backend == "compiled":
        if not _eligible(ring):
            raise RuntimeError("ring is not eligible for the compiled kernel "
                               "(modulus or degree too large)")
        return True
    return _eligible(ring)


class _RingData:
    """Flat int64 tables the compiled kernel needs, cached per ring."""

    __slots__ = ("xred", "sigmas", "fbar")

    def __init__(self, ring: WittRing):
        m = ring.params.deg
        if m > 1:
            self.xred = np.array(ring._xred, dtype=np.int64).reshape(m - 1, m)
        else:
            self.xred = np.zeros((0, 1), dtype=np.int64)
        self.sigmas = np.array(ring._sigma_pows, dtype=np.int64).reshape(m, m, m)
        self.fbar = np.array(ring._fbar, dtype=np.int64)


def _data(ring: WittRing) -> _RingData:
    data = getattr(ring, "_kernel_data", None)
    if data is None:
        data = _RingData(ring)
        ring._kernel_data = data
    return data


def mat_to_array(matrix) -> np.ndarray:
    return np.array([[e.coeffs for e in row] for row in matrix], dtype=np.int64)


def array_to_mat(ring: WittRing, arr: np.ndarray):
    return tuple(tuple(WittElem(ring, tuple(int(c) for c in arr[i, j]))
                       for j in range(arr.shape[1]))
                 for i in range(arr.shape[0]))


def mat_mul(ring: WittRing, a, b):
    if _use_compiled(ring):
        d = _data(ring)
        out = _core.mat_mul(mat_to_array(a), mat_to_array(b), d.xred, ring.modulus)
        return array_to_mat(ring, out)
    return _kernel_py.mat_mul(ring, a, b)


def mat_sigma(ring: WittRing, a, k: int):
    k %= ring.params.deg
    if k == 0:
        return a
    if _use_compiled(ring):
        d = _data(ring)
        out = _core.mat_sigma(mat_to_array(a), d.sigmas[k], ring.modulus)
        return array_to_mat(ring, out)
    return _kernel_py.mat_sigma(ring, a, k)


def phi_power(ring: WittRing, a, n: int):
    if n < 1:
        raise ValueError("n must be >= 1")
    if _use_compiled(ring):
        d = _data(ring)
        out = _core.phi_power(mat_to_array(a), n, d.sigmas, d.xred, ring.modulus)
        return array_to_mat(ring, out)
    return _kernel_py.phi_power(ring, a, n)


def charpoly(ring: WittRing, a):
    if _use_compiled(ring):
        d = _data(ring)
        out = _core.charpoly(mat_to_array(a), d.xred, ring.modulus)
        return tuple(WittElem(ring, tuple(int(c) for c in out[i]))
                     for i in range(out.shape[0]))
    return _kernel_py.charpoly(ring, a)


def smith_valuations(ring: WittRing, a):
    if _use_compiled(ring):
        d = _data(ring)
        out = _core.smith_valuations(mat_to_array(a), d.xred, d.fbar,
                                     ring.modulus, ring.params.p,
                                     ring.params.precision)
        return tuple(int(v) for v in out)
    return _kernel_py.smith_valuations(ring, a)
