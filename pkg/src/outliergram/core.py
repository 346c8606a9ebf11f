"""Shape-outlier detection on the MEI-MBD plane.

Pipeline: per-curve depth records give each curve a vertical distance below
the bounding parabola; a boxplot rule on those distances flags the directly
outlying shapes; curves hugging the top or bottom of the sample, where band
depth is uninformative, get a second chance after a vertical shift toward
the center.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import kernels
from .depth import parabola_coefficients, parabola_value
from .sample import DepthRecord, FunctionalSample

__all__ = [
    "Stage",
    "BoundaryKind",
    "Boundary",
    "ShapeOutlier",
    "OutlierReport",
    "compute_records",
    "quartiles",
    "detect_direct",
    "shift_candidates",
    "detect_shifted",
    "run_outliergram",
]

# Keeps the detection threshold strictly positive when every distance is 0
# (e.g. perfectly non-crossing samples), well above float noise in d but
# far below any meaningful distance.
_THRESHOLD_FLOOR = 1e-9


class Stage(str, enum.Enum):
    """How a shape outlier was caught."""

    DIRECT = "direct"
    SHIFTED_UP = "shifted_up"
    SHIFTED_DOWN = "shifted_down"


class BoundaryKind(str, enum.Enum):
    STANDARD = "standard"
    ADJUSTED = "adjusted"


@dataclass(frozen=True)
class Boundary:
    """Detection boundary in distance space.

    Standard rule: flag when ``d >= q3 + factor * iqr`` (factor 1.5 by
    default). Adjusted rule: flag when ``d >= factor * q1`` with a factor
    calibrated on simulated outlier-free samples.
    """

    kind: BoundaryKind
    q1: float
    q3: float
    iqr: float
    factor: float

    @property
    def threshold(self) -> float:
        if self.kind is BoundaryKind.STANDARD:
            raw = self.q3 + self.factor * self.iqr
        else:
            raw = self.factor * self.q1
        return max(raw, _THRESHOLD_FLOOR)


@dataclass(frozen=True)
class ShapeOutlier:
    index: int
    stage: Stage
    shifted_mei: float | None = None
    shifted_mbd: float | None = None


@dataclass(frozen=True)
class OutlierReport:
    shape_outliers: tuple[ShapeOutlier, ...]
    magnitude_outliers: tuple[int, ...]
    boundary: Boundary
    records: tuple[DepthRecord, ...]

    def shape_indices(self) -> tuple[int, ...]:
        return tuple(o.index for o in self.shape_outliers)


def compute_records(sample: FunctionalSample) -> tuple[DepthRecord, ...]:
    """Depth record per curve: MBD, MEI, parabola value and distance."""
    mbd, mei, _ = kernels.depth_counts(sample.values, sample.grid.weights)
    coeffs = parabola_coefficients(sample.n)
    par = parabola_value(coeffs, mei)
    return tuple(
        DepthRecord(mbd=float(b), mei=float(e), parabola=float(P), distance=float(P - b))
        for b, e, P in zip(mbd, mei, par)
    )


def quartiles(d) -> tuple[float, float, float]:
    """First and third quartile plus IQR, by linear interpolation of order
    statistics (the fractional order statistic at position ``1 + (n-1) q``)."""
    d = np.asarray(d, dtype=np.float64)
    if d.size < 4:
        raise ValueError("need at least 4 values for quartiles")
    q1, q3 = _interp_quartiles(d)
    return q1, q3, q3 - q1


def _interp_quartiles(d: np.ndarray) -> tuple[float, float]:
    q1, q3 = np.quantile(d, [0.25, 0.75])  # numpy's linear method
    return float(q1), float(q3)


def detect_direct(records, boundary: Boundary) -> set[int]:
    """Indices whose distance reaches the boundary threshold."""
    thr = boundary.threshold
    return {i for i, r in enumerate(records) if r.distance >= thr}


def shift_candidates(sample: FunctionalSample, index: int) -> list[tuple[Stage, np.ndarray]]:
    """Vertically re-centered versions of a curve poking outside the others'
    envelope.

    A curve dipping under the pointwise minimum of the rest is raised until
    it touches that lower envelope; one exceeding the pointwise maximum is
    lowered likewise. Both shifts are produced when both conditions hold,
    upward first. Curves inside the envelope yield nothing.
    """
    x = sample.values[index]
    others = np.delete(sample.values, index, axis=0)
    out: list[tuple[Stage, np.ndarray]] = []
    gap_below = x - others.min(axis=0)
    if gap_below.min() < 0:
        out.append((Stage.SHIFTED_UP, x - gap_below.min()))
    gap_above = x - others.max(axis=0)
    if gap_above.max() > 0:
        out.append((Stage.SHIFTED_DOWN, x - gap_above.max()))
    return out


def detect_shifted(
    sample: FunctionalSample,
    records,
    boundary: Boundary,
    so_direct: set[int],
) -> list[ShapeOutlier]:
    """Second detection pass for curves hugging the sample's edges.

    Each candidate is replaced by its shifted version (one at a time, all
    other curves untouched), its depth recomputed in the modified sample,
    and the original threshold reapplied; quartiles are never recomputed.
    A curve with two candidate shifts is flagged by the first that lands in
    the outlying region, upward before downward.
    """
    thr = boundary.threshold
    coeffs = parabola_coefficients(sample.n)
    weights = sample.grid.weights
    flagged: list[ShapeOutlier] = []
    for i in range(sample.n):
        if i in so_direct:
            continue
        candidates = shift_candidates(sample, i)
        if not candidates:
            continue
        others = np.delete(sample.values, i, axis=0)
        for stage, shifted in candidates:
            mbd, mei = kernels.single_depth(others, shifted, weights)
            if parabola_value(coeffs, mei) - mbd >= thr:
                flagged.append(
                    ShapeOutlier(index=i, stage=stage, shifted_mei=mei, shifted_mbd=mbd)
                )
                break
    return flagged


def run_outliergram(
    sample: FunctionalSample,
    kind: BoundaryKind | str = BoundaryKind.STANDARD,
    *,
    factor: float = 1.5,
    with_fbplot: bool = False,
    config=None,
) -> OutlierReport:
    """Full shape-outlier detection, composing records, boundary, direct rule
    and the shifted second pass.

    ``kind`` selects the standard boxplot boundary (with ``factor``) or the
    calibrated adjusted boundary (``config`` is an optional
    :class:`~outliergram.adjusted.CalibrationConfig`). ``with_fbplot`` adds
    magnitude outliers from the functional boxplot to the report.
    """
    kind = BoundaryKind(kind)
    records = compute_records(sample)
    d = np.array([r.distance for r in records])

    if kind is BoundaryKind.ADJUSTED:
        from .adjusted import CalibrationConfig, calibrate_factor

        boundary = calibrate_factor(sample, config or CalibrationConfig(), records=records)
    else:
        q1, q3 = _interp_quartiles(d)
        boundary = Boundary(
            kind=BoundaryKind.STANDARD, q1=q1, q3=q3, iqr=q3 - q1, factor=factor
        )

    so_direct = detect_direct(records, boundary)
    shifted = detect_shifted(sample, records, boundary, so_direct)
    shape_outliers = tuple(
        sorted(
            [ShapeOutlier(index=i, stage=Stage.DIRECT) for i in so_direct] + shifted,
            key=lambda o: o.index,
        )
    )

    magnitude: tuple[int, ...] = ()
    if with_fbplot:
        from .fbplot import functional_boxplot

        magnitude = tuple(functional_boxplot(sample).magnitude_outliers)

    return OutlierReport(
        shape_outliers=shape_outliers,
        magnitude_outliers=magnitude,
        boundary=boundary,
        records=records,
    )
