"""Backend dispatch for the hot loops.

The numba backend is used when numba imports and ``SUPERSOLV_NO_NUMBA`` is
unset; otherwise the pure-numpy module is used.  Both modules stay importable
so the benchmark and the cross-backend tests can compare them directly.
"""
from . import _kernels_numpy as numpy_backend
from .config import numba_requested

try:
    from . import _kernels_numba as numba_backend
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba_backend = None

if numba_backend is not None and numba_requested():
    active = numba_backend
    BACKEND = "numba"
else:
    active = numpy_backend
    BACKEND = "numpy"

closure = active.closure
product_mask = active.product_mask
permutes = active.permutes
conjugate_members = active.conjugate_members
tcc_witness = active.tcc_witness
normalizes = active.normalizes
element_orders = active.element_orders
extend_by_cyclics = active.extend_by_cyclics

__all__ = [
    "BACKEND",
    "closure",
    "conjugate_members",
    "element_orders",
    "extend_by_cyclics",
    "normalizes",
    "numba_backend",
    "numpy_backend",
    "permutes",
    "product_mask",
    "tcc_witness",
]
