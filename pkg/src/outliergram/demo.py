"""Built-in demonstration samples and their SVG figures.

Two classic situations:

* ``shifted_sines_sample`` — fifteen vertically shifted sines (which never
  cross each other) plus a flat zero line and a cosine. The two intruders
  sit mid-sample in level yet fall far below the parabola, the textbook
  picture of hidden shape outliers.
* ``contaminated_sines_sample`` — fifty noisy sines with four planted
  curves: two shape outliers hidden inside the band (a cosine and a flat
  line), one raised cosine that is both magnitude- and shape-atypical, and
  one raised sine that is a pure level shift. Only the last two stand out
  visually; the outliergram should flag the first three, the raised cosine
  after shifting, and leave the raised sine alone.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .core import run_outliergram
from .fbplot import functional_boxplot
from .sample import FunctionalSample, equidistant_grid
from .simulation import gp_sample
from .svg import render_curves, render_fbplot, render_outliergram

__all__ = [
    "shifted_sines_sample",
    "contaminated_sines_sample",
    "CONTAMINATED_SEED",
    "write_demo_svgs",
]

# frozen after verifying the planted outliers are exactly what the standard
# rule detects on this draw
CONTAMINATED_SEED = 0

# planted positions in contaminated_sines_sample (0-based)
HIDDEN_COSINE = 50
HIDDEN_FLAT = 51
RAISED_COSINE = 52
RAISED_SINE = 53


def shifted_sines_sample(p: int = 100) -> FunctionalSample:
    """17 curves: sin(4 pi t) shifted by alternating offsets i/10 for
    i = 1..15, the zero function, and cos(4 pi t)."""
    grid = equidistant_grid(p)
    t = grid.points
    curves = [np.sin(4.0 * np.pi * t) + ((-1.0) ** i) * (i / 10.0)
              for i in range(1, 16)]
    curves.append(np.zeros_like(t))
    curves.append(np.cos(4.0 * np.pi * t))
    return FunctionalSample(grid=grid, values=np.array(curves))


def contaminated_sines_sample(
    seed: int = CONTAMINATED_SEED, n_base: int = 50, p: int = 50
) -> tuple[FunctionalSample, dict[str, int]]:
    """Noisy sine sample with four planted outliers appended.

    Returns the sample and the planted positions keyed by role:
    ``hidden_cosine`` and ``hidden_flat`` (shape outliers inside the band),
    ``raised_cosine`` (magnitude outlier with atypical shape) and
    ``raised_sine`` (magnitude outlier with typical shape).
    """
    rng = np.random.default_rng(seed)
    grid = equidistant_grid(p)
    t = grid.points
    n = n_base + 4
    noise = gp_sample(
        lambda tt: np.zeros_like(tt),
        lambda s, u: 0.2 * np.exp(-0.8 * np.abs(s - u)),
        grid, n, rng,
    )
    sine = np.sin(4.0 * np.pi * t)
    cosine = np.cos(4.0 * np.pi * t)
    values = np.empty((n, p))
    values[:n_base] = sine + noise[:n_base]
    values[n_base + 0] = cosine + noise[n_base + 0]
    values[n_base + 1] = 0.0 + noise[n_base + 1]
    values[n_base + 2] = cosine + 2.5 + noise[n_base + 2]
    values[n_base + 3] = sine + 2.5 + noise[n_base + 3]
    planted = {
        "hidden_cosine": n_base + 0,
        "hidden_flat": n_base + 1,
        "raised_cosine": n_base + 2,
        "raised_sine": n_base + 3,
    }
    return FunctionalSample(grid=grid, values=values), planted


def write_demo_svgs(outdir) -> list[Path]:
    """Render both demo samples (curves + outliergram, plus a functional
    boxplot for the contaminated one) into ``outdir``."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    sines = shifted_sines_sample()
    report = run_outliergram(sines)
    for name, doc in [
        ("shifted_sines_curves.svg", render_curves(sines, report)),
        ("shifted_sines_outliergram.svg", render_outliergram(report)),
    ]:
        path = outdir / name
        path.write_text(doc, encoding="utf-8")
        written.append(path)

    contaminated, _ = contaminated_sines_sample()
    report = run_outliergram(contaminated, with_fbplot=True)
    for name, doc in [
        ("contaminated_curves.svg", render_curves(contaminated, report)),
        ("contaminated_outliergram.svg", render_outliergram(report)),
        ("contaminated_fbplot.svg",
         render_fbplot(contaminated, functional_boxplot(contaminated))),
    ]:
        path = outdir / name
        path.write_text(doc, encoding="utf-8")
        written.append(path)
    return written
