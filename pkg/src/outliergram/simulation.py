"""Synthetic curve generators and the detection-rate evaluation harness.

Three standard test beds, each a smooth trend plus a stationary Gaussian
process, contaminated by a fixed share of curves drawn from a deformed
trend:

* M1: peaked trend ``30 t (1-t)^{3/2}``; contamination mirrors the peak to
  ``30 t^{3/2} (1-t)``. Noise kernel ``0.3 exp(-|s-t|/0.3)``.
* M2: linear trend ``4t``; contamination shifts the level by ``+-1.8`` (fair
  coin) and adds a sharp Gaussian bump centered uniformly in [0.25, 0.75].
  Noise kernel ``exp(-|s-t|)``.
* M3: linear trend ``4t``; contamination adds a randomly phased sine
  ``2 sin(4 pi (t + theta))``, theta uniform in [0.25, 0.75]. Same kernel.

The harness replays a detector over seeded runs and reports the mean and
standard deviation of the detection rate (share of planted outliers found)
and the false-positive rate (share of clean curves flagged).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .adjusted import CalibrationConfig
from .core import BoundaryKind, run_outliergram
from .fbplot import functional_boxplot
from .sample import FunctionalSample, TimeGrid, equidistant_grid
from .utils import parallel_map

__all__ = [
    "ModelSpec",
    "SimulationResult",
    "gp_sample",
    "generate",
    "evaluate",
    "METHODS",
]

METHODS = ("outliergram", "adjusted_outliergram", "fbplot")


@dataclass(frozen=True)
class ModelSpec:
    model_id: str
    n: int
    c: float
    p: int = 50
    seed: int = 0

    def __post_init__(self):
        if self.model_id not in ("M1", "M2", "M3"):
            raise ValueError(f"unknown model {self.model_id!r}; use M1, M2 or M3")
        if self.n < 3:
            raise ValueError("n must be at least 3")
        if not 0.0 <= self.c < 1.0:
            raise ValueError("contamination rate must lie in [0, 1)")

    @property
    def n_contaminated(self) -> int:
        # guard against float residue: 0.1 * 100 must give 10, not ceil(10.000000000000002)
        return math.ceil(self.c * self.n - 1e-9)


@dataclass(frozen=True)
class SimulationResult:
    """Aggregated detection (pc) and false-positive (pf) rates.

    ``pc_mean``/``pc_sd`` are None when no run contained planted outliers
    (the rate is undefined there and such runs are skipped)."""

    pc_mean: float | None
    pc_sd: float | None
    pf_mean: float
    pf_sd: float
    runs: int


def _exp_kernel(scale: float, variance: float = 1.0):
    def cov(s, t):
        return variance * np.exp(-np.abs(s - t) / scale)

    return cov


_MODEL_KERNELS = {
    "M1": _exp_kernel(0.3, 0.3),
    "M2": _exp_kernel(1.0),
    "M3": _exp_kernel(1.0),
}


def gp_sample(mean_fn, cov_fn, grid: TimeGrid, count: int, rng: np.random.Generator) -> np.ndarray:
    """Draw ``count`` Gaussian-process curves on the grid.

    ``mean_fn`` maps a time array to mean values, ``cov_fn(s, t)`` is the
    covariance function (evaluated on the point pairs of the grid). The
    covariance factorization falls back to an eigenvalue square root with a
    small floor when triangular factorization fails.
    """
    t = grid.points
    mean = np.asarray(mean_fn(t), dtype=np.float64)
    cov = np.asarray(cov_fn(t[:, None], t[None, :]), dtype=np.float64)
    if not np.any(cov):
        return np.tile(mean, (count, 1))
    try:
        factor = np.linalg.cholesky(cov)
    except np.linalg.LinAlgError:
        eigval, eigvec = np.linalg.eigh((cov + cov.T) / 2.0)
        floor = 1e-10 * max(float(eigval.max()), 1.0)
        factor = eigvec * np.sqrt(np.maximum(eigval, floor))
    return mean + rng.standard_normal((count, grid.p)) @ factor.T


def _main_mean(model_id: str, t: np.ndarray) -> np.ndarray:
    if model_id == "M1":
        return 30.0 * t * (1.0 - t) ** 1.5
    return 4.0 * t


def _contamination_mean(model_id: str, t: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    if model_id == "M1":
        return 30.0 * t**1.5 * (1.0 - t)
    if model_id == "M2":
        sign = -1.0 if rng.integers(0, 2) else 1.0
        mu = rng.uniform(0.25, 0.75)
        bump = np.exp(-((t - mu) ** 2) / 0.02) / np.sqrt(2.0 * np.pi * 0.01)
        return 4.0 * t + sign * 1.8 + bump
    theta = rng.uniform(0.25, 0.75)
    return 4.0 * t + 2.0 * np.sin(4.0 * np.pi * (t + theta))


def generate(
    spec: ModelSpec, rng: np.random.Generator | None = None
) -> tuple[FunctionalSample, tuple[int, ...]]:
    """Sample from a model spec; contaminated curves sit at the end.

    Returns the sample and the indices of the planted outliers (empty when
    the contamination rate is 0).
    """
    if rng is None:
        rng = np.random.default_rng(spec.seed)
    grid = equidistant_grid(spec.p)
    t = grid.points
    n_out = spec.n_contaminated
    n_main = spec.n - n_out

    noise = gp_sample(lambda tt: np.zeros_like(tt), _MODEL_KERNELS[spec.model_id],
                      grid, spec.n, rng)
    values = np.empty((spec.n, spec.p))
    values[:n_main] = _main_mean(spec.model_id, t) + noise[:n_main]
    for k in range(n_out):
        values[n_main + k] = _contamination_mean(spec.model_id, t, rng) + noise[n_main + k]
    return FunctionalSample(grid=grid, values=values), tuple(range(n_main, spec.n))


def _detect(method: str, sample: FunctionalSample, calib_seed: int) -> set[int]:
    if method == "outliergram":
        return set(run_outliergram(sample).shape_indices())
    if method == "adjusted_outliergram":
        report = run_outliergram(
            sample, BoundaryKind.ADJUSTED, config=CalibrationConfig(seed=calib_seed)
        )
        return set(report.shape_indices())
    if method == "fbplot":
        return set(functional_boxplot(sample).magnitude_outliers)
    raise ValueError(f"unknown method {method!r}; use one of {METHODS}")


def evaluate(method: str, spec: ModelSpec, runs: int) -> SimulationResult:
    """Replay ``runs`` seeded simulations of a detector on a model.

    Per run: generate a sample, detect, score the detection rate
    ``|found & planted| / |planted|`` (skipped when nothing was planted) and
    the false-positive rate ``|found - planted| / (n - |planted|)``; then
    aggregate means and sample standard deviations across runs.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; use one of {METHODS}")
    if runs < 1:
        raise ValueError("runs must be at least 1")
    run_streams = np.random.SeedSequence(spec.seed).spawn(runs)

    def one_run(stream) -> tuple[float, float]:
        gen_stream, calib_stream = stream.spawn(2)
        rng = np.random.Generator(np.random.PCG64(gen_stream))
        sample, true_idx = generate(spec, rng)
        calib_seed = int(calib_stream.generate_state(1)[0])
        found = _detect(method, sample, calib_seed)
        truth = set(true_idx)
        pc = len(found & truth) / len(truth) if truth else np.nan
        pf = len(found - truth) / (spec.n - len(truth))
        return pc, pf

    scores = np.array(parallel_map(one_run, run_streams))
    pc_vals = scores[:, 0][~np.isnan(scores[:, 0])]
    pf_vals = scores[:, 1]

    def _sd(x: np.ndarray) -> float:
        return float(np.std(x, ddof=1)) if x.size > 1 else 0.0

    return SimulationResult(
        pc_mean=float(pc_vals.mean()) if pc_vals.size else None,
        pc_sd=_sd(pc_vals) if pc_vals.size else None,
        pf_mean=float(pf_vals.mean()),
        pf_sd=_sd(pf_vals),
        runs=runs,
    )
