"""Backend selection for the integer polynomial kernels.

The compiled module is used when it imports; ``TOPVERTEX_PURE_PYTHON=1``
forces the pure-Python fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("TOPVERTEX_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:  # pragma: no cover - depends on the build
        _impl = _pykernels

BACKEND: str = _impl.NAME
mul = _impl.mul
divexact = _impl.divexact

__all__ = ["BACKEND", "mul", "divexact"]
