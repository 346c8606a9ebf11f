import numpy as np
import pytest

from outliergram import FunctionalSample, equidistant_grid, make_grid


def random_sample(rng, n=None, p=None, ties=False) -> FunctionalSample:
    """Random curve sample; with ties=True values are coarsened to one
    decimal so equal values appear all over the grid."""
    n = n if n is not None else int(rng.integers(3, 26))
    p = p if p is not None else int(rng.integers(5, 41))
    values = rng.normal(size=(n, p)) + 0.5 * np.sin(
        np.linspace(0, 2 * np.pi, p) * rng.uniform(0.5, 2.0)
    )
    if ties:
        values = np.round(values, 1)
    return FunctionalSample(grid=equidistant_grid(p), values=values)


def non_crossing_sample(rng, n=None, p=None) -> FunctionalSample:
    """Vertical shifts of one random base curve; no two curves ever meet."""
    n = n if n is not None else int(rng.integers(3, 20))
    p = p if p is not None else int(rng.integers(5, 30))
    base = np.cumsum(rng.normal(size=p)) * 0.3
    offsets = np.sort(rng.normal(size=n) * 3.0)
    offsets += np.arange(n) * 1e-3  # guarantee strict separation
    return FunctionalSample(grid=equidistant_grid(p), values=base + offsets[:, None])


@pytest.fixture
def rng():
    return np.random.default_rng(1729)


@pytest.fixture
def constant_sample_123():
    """Three constant curves at heights 1 < 2 < 3 on a 5-point grid."""
    return FunctionalSample(
        grid=equidistant_grid(5),
        values=np.array([[1.0] * 5, [2.0] * 5, [3.0] * 5]),
    )


@pytest.fixture
def irregular_grid():
    return make_grid([0.0, 0.1, 0.4, 0.45, 1.0])
