"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the pure-Python
twin is used. Set ``CUBICBIR_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _kernels_py as python_backend

compiled_backend = None
if not os.environ.get("CUBICBIR_PURE_PYTHON"):
    try:
        from . import _kernels as compiled_backend  # type: ignore[no-redef]
    except ImportError:
        compiled_backend = None

_active = compiled_backend if compiled_backend is not None else python_backend
BACKEND = "cython" if compiled_backend is not None else "python"

group_closure = _active.group_closure
orbit_partition = _active.orbit_partition

__all__ = ["BACKEND", "group_closure", "orbit_partition", "python_backend", "compiled_backend"]
