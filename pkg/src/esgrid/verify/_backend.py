"""Kernel backend selection.

Three interchangeable kernel sets exist:

* ``numba``  - @njit compiled loops over int64 coordinates (default when
  numba imports and the coordinates certifiably fit);
* ``numpy``  - vectorized int64 fallback, selected with ESGRID_BACKEND=numpy;
* ``python`` - arbitrary-precision reference loops, selected with
  ESGRID_BACKEND=python or forced automatically whenever a single cross
  product could overflow int64.

Set ESGRID_BACKEND to pin one explicitly.
"""

from __future__ import annotations

import os

import numpy as np

# with every |coordinate| below this, |cross product| < 2 * SAFE_EXTENT^2 < 2^63
SAFE_EXTENT = 1 << 30

_ENV = "ESGRID_BACKEND"


def _numba_available() -> bool:
    try:
        from . import _kernels_numba  # noqa: F401
        return True
    except ImportError:
        return False


def requested_backend() -> str:
    name = os.environ.get(_ENV, "").strip().lower()
    if name in ("numba", "numpy", "python"):
        return name
    if name:
        raise ValueError(f"{_ENV} must be numba, numpy or python, got {name!r}")
    return "numba" if _numba_available() else "numpy"


def fits_int64(xs, ys) -> bool:
    if not xs:
        return True
    return max(max(map(abs, xs)), max(map(abs, ys))) < SAFE_EXTENT


def kernels_for(xs, ys):
    """Pick the kernel module for these (already translated) coordinates and
    convert them to the representation the module expects."""
    name = requested_backend()
    if not fits_int64(xs, ys):
        name = "python"
    if name == "python":
        from . import _kernels_python as mod
        return name, mod, list(xs), list(ys)
    if name == "numba":
        from . import _kernels_numba as mod
    else:
        from . import _kernels_numpy as mod
    return name, mod, np.asarray(xs, np.int64), np.asarray(ys, np.int64)
