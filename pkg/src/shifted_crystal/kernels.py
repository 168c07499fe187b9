"""Backend selection for the hot word kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module is used.  Set ``SHIFTED_CRYSTAL_PURE=1`` to force the fallback.
"""

import os

from . import _pykernels

_NAMES = (
    "canonical",
    "standard_labels",
    "destandardize",
    "walk_end",
    "lower_unprimed",
    "raise_unprimed",
    "lower_primed",
    "raise_primed",
)


def _load():
    if os.environ.get("SHIFTED_CRYSTAL_PURE", "") not in ("", "0"):
        return _pykernels, "python"
    try:
        from . import _kernels
    except ImportError:
        return _pykernels, "python"
    return _kernels, "cython"


_impl, BACKEND = _load()

canonical = _impl.canonical
standard_labels = _impl.standard_labels
destandardize = _impl.destandardize
walk_end = _impl.walk_end
lower_unprimed = _impl.lower_unprimed
raise_unprimed = _impl.raise_unprimed
lower_primed = _impl.lower_primed
raise_primed = _impl.raise_primed

# inspection helpers are only needed off the hot path
walk = _pykernels.walk
final_critical = _pykernels.final_critical
representatives2 = _pykernels.representatives


def backend_module(name):
    """Return the kernel module for ``"python"`` or ``"cython"``."""
    if name == "python":
        return _pykernels
    from . import _kernels

    return _kernels
