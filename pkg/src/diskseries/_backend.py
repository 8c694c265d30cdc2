"""Kernel backend selection.

The compiled extension is used when importable; otherwise the NumPy
fallback.  Set DISKSERIES_FORCE_PYTHON=1 to force the fallback (useful for
benchmarking and debugging).
"""

import os

from . import _kernels_py

if os.environ.get("DISKSERIES_FORCE_PYTHON", "") not in ("", "0"):
    kernels = _kernels_py
    _BACKEND = "python"
else:
    try:
        from . import _kernels_cy as kernels

        _BACKEND = "cython"
    except ImportError:
        kernels = _kernels_py
        _BACKEND = "python"


def backend_name():
    """Name of the active kernel backend: ``"cython"`` or ``"python"``."""
    return _BACKEND


def available_backends():
    """Mapping of backend name to kernel module, for every importable backend."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels_cy

        out["cython"] = _kernels_cy
    except ImportError:
        pass
    return out
