"""Static SVG rendering of the outliergram, curve plots and the functional
boxplot.

Pure document generators: fixed float formatting (6 significant digits), no
timestamps, no randomness, so identical inputs produce identical bytes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import OutlierReport, Stage
from .fbplot import FunctionalBoxplotResult
from .sample import FunctionalSample

__all__ = ["PlotSpec", "render_outliergram", "render_curves", "render_fbplot"]

DEFAULT_COLORS = {
    "normal": "#8c8c8c",
    "shape_outlier": "#d03232",
    "magnitude_outlier": "#2a7e3e",
    "shifted_marker": "#d03232",
}


@dataclass(frozen=True)
class PlotSpec:
    width: int = 640
    height: int = 480
    point_radius: float = 3.5
    colors: dict = field(default_factory=lambda: dict(DEFAULT_COLORS))
    x_range: tuple[float, float] | None = None  # None = auto
    y_range: tuple[float, float] | None = None


def _fmt(x: float) -> str:
    return format(float(x), ".6g")


class _Canvas:
    """Maps data coordinates to pixels and accumulates SVG elements."""

    MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 56, 14, 14, 42

    def __init__(self, spec: PlotSpec, x_range, y_range):
        self.spec = spec
        self.x0, self.x1 = float(x_range[0]), float(x_range[1])
        self.y0, self.y1 = float(y_range[0]), float(y_range[1])
        if not all(np.isfinite([self.x0, self.x1, self.y0, self.y1])):
            raise ValueError("axis ranges must be finite")
        if self.x1 <= self.x0:
            self.x1 = self.x0 + 1.0
        if self.y1 <= self.y0:
            self.y1 = self.y0 + 1.0
        self.plot_w = spec.width - self.MARGIN_L - self.MARGIN_R
        self.plot_h = spec.height - self.MARGIN_T - self.MARGIN_B
        self.parts: list[str] = []

    def px(self, x: float) -> float:
        return self.MARGIN_L + (x - self.x0) / (self.x1 - self.x0) * self.plot_w

    def py(self, y: float) -> float:
        return self.MARGIN_T + (1.0 - (y - self.y0) / (self.y1 - self.y0)) * self.plot_h

    def add(self, element: str) -> None:
        self.parts.append(element)

    def polyline(self, xs, ys, stroke: str, width: float = 1.5, dash: str | None = None,
                 clip: bool = False) -> None:
        pts = " ".join(f"{_fmt(self.px(x))},{_fmt(self.py(y))}" for x, y in zip(xs, ys))
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        clip_attr = ' clip-path="url(#plotarea)"' if clip else ""
        self.add(f'<polyline points="{pts}" fill="none" stroke="{stroke}" '
                 f'stroke-width="{_fmt(width)}"{dash_attr}{clip_attr}/>')

    def polygon(self, xs, ys, fill: str, opacity: float = 1.0) -> None:
        pts = " ".join(f"{_fmt(self.px(x))},{_fmt(self.py(y))}" for x, y in zip(xs, ys))
        self.add(f'<polygon points="{pts}" fill="{fill}" fill-opacity="{_fmt(opacity)}" '
                 f'stroke="none"/>')

    def dot(self, x: float, y: float, color: str, r: float | None = None) -> None:
        r = self.spec.point_radius if r is None else r
        self.add(f'<circle cx="{_fmt(self.px(x))}" cy="{_fmt(self.py(y))}" '
                 f'r="{_fmt(r)}" fill="{color}"/>')

    def ring(self, x: float, y: float, color: str, r: float) -> None:
        self.add(f'<circle cx="{_fmt(self.px(x))}" cy="{_fmt(self.py(y))}" '
                 f'r="{_fmt(r)}" fill="none" stroke="{color}" stroke-width="1.5"/>')

    def text(self, x_px: float, y_px: float, s: str, size: int = 11,
             anchor: str = "middle") -> None:
        self.add(f'<text x="{_fmt(x_px)}" y="{_fmt(y_px)}" font-size="{size}" '
                 f'font-family="sans-serif" text-anchor="{anchor}">{s}</text>')

    def axes(self, x_label: str, y_label: str, x_ticks, y_ticks) -> None:
        left, right = self.MARGIN_L, self.MARGIN_L + self.plot_w
        top, bottom = self.MARGIN_T, self.MARGIN_T + self.plot_h
        self.add(f'<rect x="{left}" y="{top}" width="{self.plot_w}" '
                 f'height="{self.plot_h}" fill="none" stroke="#000000"/>')
        for xt in x_ticks:
            px = self.px(xt)
            self.add(f'<line x1="{_fmt(px)}" y1="{bottom}" x2="{_fmt(px)}" '
                     f'y2="{bottom + 5}" stroke="#000000"/>')
            self.text(px, bottom + 18, _fmt(xt))
        for yt in y_ticks:
            py = self.py(yt)
            self.add(f'<line x1="{left - 5}" y1="{_fmt(py)}" x2="{left}" '
                     f'y2="{_fmt(py)}" stroke="#000000"/>')
            self.text(left - 9, py + 4, _fmt(yt), anchor="end")
        self.text(left + self.plot_w / 2, bottom + 34, x_label)
        self.add(f'<text x="16" y="{_fmt(top + self.plot_h / 2)}" font-size="11" '
                 f'font-family="sans-serif" text-anchor="middle" '
                 f'transform="rotate(-90 16 {_fmt(top + self.plot_h / 2)})">{y_label}</text>')

    def document(self) -> str:
        left, top = self.MARGIN_L, self.MARGIN_T
        header = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{self.spec.width}" height="{self.spec.height}" '
            f'viewBox="0 0 {self.spec.width} {self.spec.height}">\n'
            f'<defs><clipPath id="plotarea"><rect x="{left}" y="{top}" '
            f'width="{self.plot_w}" height="{self.plot_h}"/></clipPath></defs>\n'
            f'<rect width="{self.spec.width}" height="{self.spec.height}" fill="#ffffff"/>\n'
        )
        return header + "\n".join(self.parts) + "\n</svg>\n"


def _nice_ticks(lo: float, hi: float, target: int = 5) -> list[float]:
    span = hi - lo
    if span <= 0:
        return [lo]
    raw = span / target
    mag = 10.0 ** np.floor(np.log10(raw))
    for mult in (1.0, 2.0, 2.5, 5.0, 10.0):
        if raw <= mult * mag:
            step = mult * mag
            break
    first = np.ceil(lo / step) * step
    ticks = np.arange(first, hi + step * 1e-9, step)
    return [float(t) for t in ticks]


def _padded_range(lo: float, hi: float) -> tuple[float, float]:
    pad = 0.05 * (hi - lo) if hi > lo else 1.0
    return lo - pad, hi + pad


def render_outliergram(report: OutlierReport, plot: PlotSpec | None = None) -> str:
    """Scatter of (MEI, MBD) with the bounding parabola (solid) and the
    detection boundary, the parabola lowered by the threshold (dashed).

    Outliers caught after a vertical shift get an open-circle marker at
    their shifted coordinates next to their filled original point.
    """
    if not report.records:
        raise ValueError("nothing to render: no depth records")
    plot = plot or PlotSpec()
    colors = {**DEFAULT_COLORS, **plot.colors}
    canvas = _Canvas(plot, plot.x_range or (0.0, 1.0), plot.y_range or (0.0, 1.0))
    ticks = [0.0, 0.25, 0.5, 0.75, 1.0]
    canvas.axes("modified epigraph index", "modified band depth", ticks, ticks)

    n = len(report.records)
    from .depth import parabola_coefficients, parabola_value

    coeffs = parabola_coefficients(n)
    mei_grid = np.linspace(0.0, 1.0, 201)
    par = parabola_value(coeffs, mei_grid)
    canvas.polyline(mei_grid, par, stroke="#000000", clip=True)
    canvas.polyline(mei_grid, par - report.boundary.threshold, stroke="#000000",
                    dash="6 4", clip=True)

    stages = {o.index: o for o in report.shape_outliers}
    magnitude = set(report.magnitude_outliers)
    for i, rec in enumerate(report.records):
        if i in stages:
            color = colors["shape_outlier"]
        elif i in magnitude:
            color = colors["magnitude_outlier"]
        else:
            color = colors["normal"]
        canvas.dot(rec.mei, rec.mbd, color)
    for o in report.shape_outliers:
        if o.stage is not Stage.DIRECT:
            canvas.ring(o.shifted_mei, o.shifted_mbd, colors["shifted_marker"],
                        plot.point_radius + 2.0)
    return canvas.document()


def _classify(i: int, report: OutlierReport | None, colors: dict) -> tuple[str, float]:
    if report is None:
        return colors["normal"], 1.0
    if i in {o.index for o in report.shape_outliers}:
        return colors["shape_outlier"], 2.0
    if i in set(report.magnitude_outliers):
        return colors["magnitude_outlier"], 2.0
    return colors["normal"], 1.0


def render_curves(sample: FunctionalSample, report: OutlierReport | None = None,
                  plot: PlotSpec | None = None) -> str:
    """All curves against time; detected outliers drawn on top in color."""
    plot = plot or PlotSpec()
    colors = {**DEFAULT_COLORS, **plot.colors}
    t = sample.grid.points
    x_range = plot.x_range or (float(t[0]), float(t[-1]))
    y_range = plot.y_range or _padded_range(float(sample.values.min()),
                                            float(sample.values.max()))
    canvas = _Canvas(plot, x_range, y_range)
    canvas.axes("time", "value", _nice_ticks(*x_range), _nice_ticks(*y_range))
    flagged = []
    for i in range(sample.n):
        color, width = _classify(i, report, colors)
        if width > 1.0:
            flagged.append((i, color, width))
            continue
        canvas.polyline(t, sample.values[i], stroke=color, width=width, clip=True)
    for i, color, width in flagged:
        canvas.polyline(t, sample.values[i], stroke=color, width=width, clip=True)
    return canvas.document()


def render_fbplot(sample: FunctionalSample, result: FunctionalBoxplotResult,
                  plot: PlotSpec | None = None) -> str:
    """Functional boxplot: central region, fences and magnitude outliers."""
    plot = plot or PlotSpec()
    colors = {**DEFAULT_COLORS, **plot.colors}
    t = sample.grid.points
    lo = min(float(sample.values.min()), float(result.fence_lower.min()))
    hi = max(float(sample.values.max()), float(result.fence_upper.max()))
    x_range = plot.x_range or (float(t[0]), float(t[-1]))
    y_range = plot.y_range or _padded_range(lo, hi)
    canvas = _Canvas(plot, x_range, y_range)
    canvas.axes("time", "value", _nice_ticks(*x_range), _nice_ticks(*y_range))

    xs = np.concatenate([t, t[::-1]])
    ys = np.concatenate([result.central_upper, result.central_lower[::-1]])
    canvas.polygon(xs, ys, fill="#b0c4d8", opacity=0.8)
    canvas.polyline(t, result.fence_lower, stroke="#30506e", dash="6 4", clip=True)
    canvas.polyline(t, result.fence_upper, stroke="#30506e", dash="6 4", clip=True)
    canvas.polyline(t, sample.values[result.median_index], stroke="#000000", width=2.0,
                    clip=True)
    for i in result.magnitude_outliers:
        canvas.polyline(t, sample.values[i], stroke=colors["magnitude_outlier"],
                        width=1.5, dash="4 3", clip=True)
    return canvas.document()
