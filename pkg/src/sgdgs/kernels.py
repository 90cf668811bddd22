"""Kernel selection: compiled extension when available, pure Python otherwise.

Set SGDGS_PURE_PYTHON=1 to force the pure kernels (used by the benchmark
and to debug suspected extension issues).
"""

from __future__ import annotations

import os

from . import _kernels_py

charpoly_coeffs = _kernels_py.charpoly_coeffs
det_int = _kernels_py.det_int
_backend = "pure"

if os.environ.get("SGDGS_PURE_PYTHON") != "1":
    try:
        from . import _speedups  # type: ignore[attr-defined]

        charpoly_coeffs = _speedups.charpoly_coeffs
        det_int = _speedups.det_int
        _backend = "compiled"
    except ImportError:
        pass


def backend() -> str:
    """Name of the active kernel backend: 'compiled' or 'pure'."""
    return _backend
