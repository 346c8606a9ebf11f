"""Pure-numpy depth-counting kernels (fallback backend).

Counting identity used throughout: at a fixed time point, a pair of curves
covers a curve when one member sits at-or-above it and the other strictly
below (pairs containing the curve itself always cover it). With ``b`` curves
strictly below, the remaining ``n - 1 - b`` non-self curves are at-or-above,
so the covering-pair count is ``C(n,2) - C(n-1-b, 2) - C(b, 2)``. This
half-open tie rule is what keeps the band-depth/epigraph-index identity and
the parabola bound exact on discretely observed curves; without ties it
coincides with the usual inclusive band membership.
"""

from __future__ import annotations

import numpy as np


def _pairs(k: np.ndarray) -> np.ndarray:
    return k * (k - 1.0) / 2.0


def depth_counts(values: np.ndarray, weights: np.ndarray):
    """Band depth, epigraph index and squared above-count average per curve.

    ``values`` is the n x p sample matrix, ``weights`` the grid measure.
    Returns ``(mbd, mei, cross)`` where ``cross`` is the weighted time
    average of the squared number of curves lying at-or-above each curve.
    Counts come from one sort per time point: O(n p log n).
    """
    values = np.asarray(values, dtype=np.float64)
    weights = np.asarray(weights, dtype=np.float64)
    n, p = values.shape
    sorted_cols = np.sort(values, axis=0)
    below = np.empty((n, p))
    for t in range(p):
        below[:, t] = np.searchsorted(sorted_cols[:, t], values[:, t], side="left")
    at_or_above_excl_self = n - 1.0 - below
    total = n * (n - 1.0) / 2.0
    covering = total - _pairs(at_or_above_excl_self) - _pairs(below)
    above_or_eq = n - below
    mbd = (covering / total) @ weights
    mei = (above_or_eq / n) @ weights
    cross = (above_or_eq**2) @ weights
    return mbd, mei, cross


def single_depth(others: np.ndarray, curve: np.ndarray, weights: np.ndarray):
    """MBD and MEI of one curve within the sample ``others + [curve]``.

    Avoids re-sorting the whole sample: only the candidate curve's counts
    are needed, an O(n p) comparison pass.
    """
    others = np.asarray(others, dtype=np.float64)
    curve = np.asarray(curve, dtype=np.float64)
    weights = np.asarray(weights, dtype=np.float64)
    m = others.shape[0]
    n = m + 1
    below = (others < curve).sum(axis=0).astype(np.float64)
    at_or_above = m - below
    total = n * (n - 1.0) / 2.0
    covering = total - _pairs(at_or_above) - _pairs(below)
    mbd = float((covering / total) @ weights)
    mei = float(((n - below) / n) @ weights)
    return mbd, mei
