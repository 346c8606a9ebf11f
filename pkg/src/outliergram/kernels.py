"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; otherwise the
numpy implementation takes over. Set OUTLIERGRAM_PURE_PYTHON=1 to force the
fallback (useful for benchmarking and debugging).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("OUTLIERGRAM_PURE_PYTHON") == "1":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

depth_counts = _impl.depth_counts
single_depth = _impl.single_depth

__all__ = ["depth_counts", "single_depth", "BACKEND"]
