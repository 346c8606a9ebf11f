"""Small shared helpers."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

__all__ = ["thread_count", "parallel_map"]


def thread_count() -> int:
    """Worker cap from OUTLIERGRAM_THREADS; defaults to 1 (serial)."""
    raw = os.environ.get("OUTLIERGRAM_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def parallel_map(fn, items) -> list:
    """Map preserving order; threads only when OUTLIERGRAM_THREADS > 1.

    Results are collected by position, so the output is identical whatever
    the completion order.
    """
    items = list(items)
    workers = thread_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
