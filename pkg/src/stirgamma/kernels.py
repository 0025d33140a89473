"""Backend selection for the floating-point evaluation kernels.

The compiled extension is used when it was built; otherwise the pure-Python
twin is loaded. Both expose the same functions.
"""
from . import _pykernels

try:
    from . import _ckernels as _active
except ImportError:  # extension not built
    _active = _pykernels

BACKEND = _active.BACKEND
raw_log_gamma = _active.raw_log_gamma
smallest_term = _active.smallest_term
first_omitted = _active.first_omitted
log_gamma_reduced = _active.log_gamma_reduced
log_gamma_many = _active.log_gamma_many


def backends():
    """Map of every importable backend name to its module."""
    found = {"python": _pykernels}
    if _active is not _pykernels:
        found[_active.BACKEND] = _active
    return found
