"""Functional samples on a common time grid.

A sample is an ``n x p`` matrix of curve values observed on a shared grid of
``p`` strictly increasing time points.  The grid carries normalized trapezoid
weights so that every time average in the depth computations is a discrete
probability measure over the observation interval (exact for equidistant
grids).
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "TimeGrid",
    "FunctionalSample",
    "DepthRecord",
    "make_grid",
    "equidistant_grid",
    "load_csv",
    "write_csv",
]

_WEIGHT_SUM_TOL = 1e-12


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.float64)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class TimeGrid:
    """Strictly increasing time points with a normalized weight per point.

    Weights are positive and sum to one; they play the role of a normalized
    measure on the observation interval, so dot products against them are
    time averages.
    """

    points: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "points", _readonly(self.points))
        object.__setattr__(self, "weights", _readonly(self.weights))
        if self.points.ndim != 1 or self.points.size < 2:
            raise ValueError("grid needs at least 2 points")
        if not np.all(np.diff(self.points) > 0):
            raise ValueError("grid points must be strictly increasing")
        if self.weights.shape != self.points.shape:
            raise ValueError("weights must match points in length")
        if not np.all(self.weights > 0):
            raise ValueError("grid weights must be positive")
        if abs(float(self.weights.sum()) - 1.0) > _WEIGHT_SUM_TOL:
            raise ValueError("grid weights must sum to 1")

    @property
    def p(self) -> int:
        return self.points.size


def make_grid(points) -> TimeGrid:
    """Build a :class:`TimeGrid` with normalized composite-trapezoid weights.

    Interior points weigh ``(t[k+1] - t[k-1]) / 2``, endpoints half of their
    single adjacent gap; weights are then normalized to sum to one.  On an
    equidistant grid every weight equals ``1/p`` after normalization of the
    half-weighted endpoints.
    """
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 1 or pts.size < 2:
        raise ValueError("grid needs at least 2 points")
    if not np.all(np.isfinite(pts)):
        raise ValueError("grid points must be finite")
    if not np.all(np.diff(pts) > 0):
        raise ValueError("grid points must be strictly increasing")
    w = np.empty_like(pts)
    w[0] = (pts[1] - pts[0]) / 2.0
    w[-1] = (pts[-1] - pts[-2]) / 2.0
    if pts.size > 2:
        w[1:-1] = (pts[2:] - pts[:-2]) / 2.0
    w /= w.sum()
    return TimeGrid(points=pts, weights=w)


def equidistant_grid(p: int, start: float = 0.0, stop: float = 1.0) -> TimeGrid:
    """Equidistant grid of ``p`` points; all weights are exactly ``1/p``."""
    if p < 2:
        raise ValueError("grid needs at least 2 points")
    pts = np.linspace(start, stop, p)
    return TimeGrid(points=pts, weights=np.full(p, 1.0 / p))


@dataclass(frozen=True)
class FunctionalSample:
    """``n`` curves observed on a common grid of ``p`` time points.

    Immutable after construction; safe to share across threads.
    """

    grid: TimeGrid
    values: np.ndarray
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.float64)
        if vals.ndim != 2:
            raise ValueError("values must be a 2-D matrix (curves x time points)")
        if vals.shape[1] != self.grid.p:
            raise ValueError(
                f"curves have {vals.shape[1]} values but the grid has {self.grid.p} points"
            )
        if vals.shape[0] < 3:
            raise ValueError("need at least 3 curves (n >= 3)")
        if not np.all(np.isfinite(vals)):
            raise ValueError("curve values must be finite (missing values unsupported)")
        object.__setattr__(self, "values", _readonly(vals))
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != vals.shape[0]:
                raise ValueError("labels must match the number of curves")
            object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def p(self) -> int:
        return self.values.shape[1]

    def label_of(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def with_curve(self, i: int, curve: np.ndarray) -> "FunctionalSample":
        """Copy of the sample with curve ``i`` replaced."""
        vals = np.array(self.values)
        vals[i] = curve
        return FunctionalSample(grid=self.grid, values=vals, labels=self.labels)


@dataclass(frozen=True)
class DepthRecord:
    """Per-curve depth summary: band depth, epigraph index, the parabola
    value at that index, and the vertical distance below the parabola."""

    mbd: float
    mei: float
    parabola: float
    distance: float

    def __post_init__(self):
        if abs(self.distance - (self.parabola - self.mbd)) > 1e-12:
            raise ValueError("distance must equal parabola - mbd")
        if self.distance < -1e-9:
            raise ValueError("distance below the theoretical floor")


def load_csv(path) -> FunctionalSample:
    """Read a functional sample from CSV.

    Layout: an optional first row ``t,<t_1>,...,<t_p>`` carrying the grid,
    then one curve per row as ``<label>,<v_1>,...,<v_p>`` (the label cell may
    be omitted when every cell of the row is numeric).  Without a header the
    grid defaults to equidistant points on [0, 1].
    """
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [row for row in csv.reader(fh) if row]
    if not rows:
        raise ValueError(f"{path}: empty file")

    grid_points = None
    if rows[0] and rows[0][0].strip() == "t":
        try:
            grid_points = [float(c) for c in rows[0][1:]]
        except ValueError as exc:
            raise ValueError(f"{path}: non-numeric grid point in header") from exc
        if len(grid_points) < 2:
            raise ValueError(f"{path}: header grid needs at least 2 points")
        rows = rows[1:]

    p = len(grid_points) if grid_points is not None else None
    labels: list[str] = []
    curves: list[list[float]] = []
    for k, row in enumerate(rows):
        cells = [c.strip() for c in row]
        has_label = False
        try:
            float(cells[0])
        except ValueError:
            has_label = True
        if p is not None and not has_label and len(cells) == p + 1:
            # numeric-looking first cell but one extra column: treat as label
            has_label = True
        vals = cells[1:] if has_label else cells
        if p is None:
            p = len(vals)
        if len(vals) != p:
            raise ValueError(
                f"{path}: row {k + 1} has {len(vals)} values, expected {p} (ragged row)"
            )
        try:
            curves.append([float(c) for c in vals])
        except ValueError as exc:
            raise ValueError(f"{path}: non-numeric cell in row {k + 1}") from exc
        labels.append(cells[0] if has_label else str(k))
    if len(curves) < 3:
        raise ValueError(f"{path}: n < 3 (got {len(curves)} curves)")

    grid = make_grid(grid_points) if grid_points is not None else equidistant_grid(p)
    return FunctionalSample(grid=grid, values=np.array(curves), labels=tuple(labels))


def write_csv(sample: FunctionalSample, path) -> None:
    """Write a sample as CSV with a grid header; floats carry 17 significant
    digits so a read-back reproduces every value bit-exactly."""
    fmt = lambda v: format(v, ".17g")
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t"] + [fmt(t) for t in sample.grid.points])
        for i in range(sample.n):
            writer.writerow([sample.label_of(i)] + [fmt(v) for v in sample.values[i]])
