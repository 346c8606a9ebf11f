"""Modified band depth (MBD) and modified epigraph index (MEI).

MBD of a curve is the mean, over all pairs of sample curves, of the fraction
of time the curve stays inside the band the pair spans (a pair containing the
curve itself covers it for the whole interval). MEI is the mean fraction of
time the sample's curves sit at or above the curve, the curve itself
included. All time fractions are taken against the grid's weight measure.

Both quantities are tied by an exact identity: with ``a0 = a2 = -2/(n(n-1))``
and ``a1 = 2(n+1)/(n-1)``,

    MBD = a0 + a1 * MEI + a2 * cross_term

where ``cross_term`` is the weighted time average of the squared at-or-above
count. Since that average dominates the square of its mean, every curve lies
on or below the parabola ``a0 + a1 * mei + a2 * n^2 * mei^2``, with equality
exactly when the at-or-above count never varies over time, e.g. for samples
whose curves never cross.

Tie rule: a pair covers a curve at a time point when one member is at-or-above
it and the other strictly below, i.e. bands are half-open, ``min < x <= max``
(self pairs still cover in full). For curves without ties this is the usual
inclusive band membership; at tied points it is the one convention under
which the identity and the parabola bound stay exact, so distances to the
parabola can never go negative no matter how discrete the data.

Two MBD routes are provided: a brute-force band enumeration (the oracle) and
a sorting-based counting path that must agree with it to float precision.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .sample import FunctionalSample

__all__ = [
    "ParabolaCoefficients",
    "parabola_coefficients",
    "parabola_value",
    "mei_all",
    "mbd_all_fast",
    "mbd_all_oracle",
    "cross_term",
    "depth_all",
]


@dataclass(frozen=True)
class ParabolaCoefficients:
    """Coefficients of the MEI-MBD bounding parabola for sample size ``n``."""

    a0: float
    a1: float
    a2: float
    n: int


def parabola_coefficients(n: int) -> ParabolaCoefficients:
    if n < 2:
        raise ValueError("need n >= 2")
    a0 = -2.0 / (n * (n - 1.0))
    a1 = 2.0 * (n + 1.0) / (n - 1.0)
    return ParabolaCoefficients(a0=a0, a1=a1, a2=a0, n=n)


def parabola_value(coeffs: ParabolaCoefficients, mei) -> float | np.ndarray:
    """Evaluate ``a0 + a1*mei + a2*n^2*mei^2`` (vectorized over ``mei``)."""
    mei = np.asarray(mei, dtype=np.float64)
    out = coeffs.a0 + coeffs.a1 * mei + coeffs.a2 * coeffs.n**2 * mei**2
    return float(out) if out.ndim == 0 else out


def depth_all(sample: FunctionalSample) -> tuple[np.ndarray, np.ndarray]:
    """MBD and MEI of every curve via the counting kernel."""
    mbd, mei, _ = kernels.depth_counts(sample.values, sample.grid.weights)
    return mbd, mei


def mei_all(sample: FunctionalSample) -> np.ndarray:
    """Modified epigraph index of every curve; values lie in [1/n, 1]."""
    _, mei, _ = kernels.depth_counts(sample.values, sample.grid.weights)
    return mei


def mbd_all_fast(sample: FunctionalSample) -> np.ndarray:
    """Modified band depth of every curve via the counting kernel."""
    mbd, _, _ = kernels.depth_counts(sample.values, sample.grid.weights)
    return mbd


def mbd_all_oracle(sample: FunctionalSample) -> np.ndarray:
    """Brute-force MBD: enumerate every band and average coverage fractions.

    Kept deliberately independent of the counting kernel so the two can
    cross-check each other. O(n^2) bands, each an O(n p) membership test;
    membership is the half-open rule ``min < x <= max``, and the two band
    members themselves count as covered for the whole interval.
    """
    values = sample.values
    w = sample.grid.weights
    n = sample.n
    acc = np.zeros(n)
    for i in range(n):
        for j in range(i + 1, n):
            lo = np.minimum(values[i], values[j])
            hi = np.maximum(values[i], values[j])
            inside = (values > lo) & (values <= hi)
            inside[i] = True
            inside[j] = True
            acc += inside @ w
    return acc / (n * (n - 1) / 2.0)


def cross_term(sample: FunctionalSample, curve_index: int) -> float:
    """Weighted time average of the squared at-or-above count for one curve.

    Equals the normalized double sum of pairwise intersection measures of the
    at-or-above time sets, the exact correction term of the MBD/MEI identity.
    Computed by direct comparison, independent of the counting kernel.
    """
    n = sample.n
    if not 0 <= curve_index < n:
        raise IndexError(f"curve index {curve_index} out of range for n={n}")
    at_or_above = (sample.values >= sample.values[curve_index]).sum(axis=0)
    return float((at_or_above.astype(np.float64) ** 2) @ sample.grid.weights)
