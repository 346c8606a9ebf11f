"""Backend equivalence: the compiled kernels and the numpy fallback must
agree to float precision on every input shape, ties included."""

import numpy as np
import pytest

from outliergram import _kernels_py
from outliergram import kernels

from conftest import random_sample

try:
    from outliergram import _kernels_cy
except ImportError:
    _kernels_cy = None

needs_ext = pytest.mark.skipif(_kernels_cy is None, reason="compiled kernels unavailable")


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")


@needs_ext
@pytest.mark.parametrize("seed", range(8))
@pytest.mark.parametrize("ties", [False, True])
def test_depth_counts_backends_agree(seed, ties):
    rng = np.random.default_rng(seed)
    s = random_sample(rng, ties=ties)
    py = _kernels_py.depth_counts(s.values, s.grid.weights)
    cy = _kernels_cy.depth_counts(s.values, s.grid.weights)
    for a, b in zip(py, cy):
        assert np.allclose(a, b, atol=1e-12, rtol=0)


@needs_ext
@pytest.mark.parametrize("seed", range(8))
def test_single_depth_backends_agree(seed):
    rng = np.random.default_rng(seed)
    s = random_sample(rng)
    curve = np.ascontiguousarray(s.values[0])
    others = np.ascontiguousarray(s.values[1:])
    py = _kernels_py.single_depth(others, curve, s.grid.weights)
    cy = _kernels_cy.single_depth(others, curve, s.grid.weights)
    assert np.allclose(py, cy, atol=1e-12, rtol=0)


@pytest.mark.parametrize("ties", [False, True])
def test_single_depth_consistent_with_full_computation(rng, ties):
    # the one-curve path must give the same (mbd, mei) as the full kernel
    for _ in range(6):
        s = random_sample(rng, ties=ties)
        mbd, mei, _ = kernels.depth_counts(s.values, s.grid.weights)
        for i in (0, s.n - 1):
            others = np.ascontiguousarray(np.delete(s.values, i, axis=0))
            curve = np.ascontiguousarray(s.values[i])
            mb1, me1 = kernels.single_depth(others, curve, s.grid.weights)
            assert abs(mb1 - mbd[i]) < 1e-12
            assert abs(me1 - mei[i]) < 1e-12


def test_all_ties_at_a_time_point():
    # when every curve passes through the same value only the n-1 pairs
    # containing each curve cover it there (half-open tie rule)
    values = np.array([[0.0, 1.0], [0.0, 2.0], [0.0, 3.0], [0.0, 4.0]])
    w = np.array([1.0, 0.0])  # all measure on the tied point
    mbd, mei, cross = _kernels_py.depth_counts(values, w)
    assert np.allclose(mbd, 3.0 / 6.0)
    assert np.allclose(mei, 1.0)
    assert np.allclose(cross, 16.0)
