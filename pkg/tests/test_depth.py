"""Depth semantics: brute-force oracle agreement, the exact MBD/MEI
identity, the bounding parabola, and the invariances the indices inherit
from their rank-based construction."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from outliergram import (
    FunctionalSample,
    cross_term,
    equidistant_grid,
    mbd_all_fast,
    mbd_all_oracle,
    mei_all,
    parabola_coefficients,
    parabola_value,
)

from conftest import non_crossing_sample, random_sample


class TestSpecExamples:
    def test_three_constants_mei(self, constant_sample_123):
        assert np.allclose(mei_all(constant_sample_123), [1.0, 2 / 3, 1 / 3], atol=1e-12)

    def test_three_constants_mbd(self, constant_sample_123):
        # enumerate the 3 bands per curve by hand: the bottom curve is
        # covered by its 2 self pairs only, the middle one by all 3
        assert np.allclose(mbd_all_oracle(constant_sample_123), [2 / 3, 1.0, 2 / 3], atol=1e-12)
        assert np.allclose(mbd_all_fast(constant_sample_123), [2 / 3, 1.0, 2 / 3], atol=1e-12)

    def test_identical_curves(self):
        # under the half-open tie rule only the n-1 self pairs cover a curve
        # that ties the whole sample: MBD = (n-1)/C(n,2) = 2/n, which is the
        # parabola value at MEI = 1 (identity and bound stay exact)
        s = FunctionalSample(grid=equidistant_grid(6), values=np.full((5, 6), 2.5))
        assert np.allclose(mei_all(s), 1.0)
        assert np.allclose(mbd_all_fast(s), 2 / 5)
        assert np.allclose(mbd_all_oracle(s), 2 / 5)
        c = parabola_coefficients(5)
        assert abs(parabola_value(c, 1.0) - 2 / 5) < 1e-12

    def test_cross_term_middle_constant(self, constant_sample_123):
        # at-or-above count for the middle curve is 2 at every time point
        assert abs(cross_term(constant_sample_123, 1) - 4.0) < 1e-12

    def test_cross_term_identical_curves(self):
        s = FunctionalSample(grid=equidistant_grid(4), values=np.zeros((6, 4)))
        assert abs(cross_term(s, 0) - 36.0) < 1e-12

    def test_cross_term_bad_index(self, constant_sample_123):
        with pytest.raises(IndexError):
            cross_term(constant_sample_123, 3)

    def test_parabola_values_n3(self):
        c = parabola_coefficients(3)
        assert abs(c.a0 + 1 / 3) < 1e-15
        assert abs(c.a1 - 4.0) < 1e-15
        assert abs(parabola_value(c, 1.0) - 2 / 3) < 1e-12   # -1/3 + 4 - 3
        assert abs(parabola_value(c, 2 / 3) - 1.0) < 1e-12   # -1/3 + 8/3 - 4/3
        assert parabola_value(c, 0.0) == c.a0

    def test_deepest_of_three_iff_inside_band(self):
        grid = equidistant_grid(4)
        inside = FunctionalSample(
            grid=grid, values=np.array([[0.0] * 4, [1, 1, 1, 1], [3.0] * 4])
        )
        assert abs(mbd_all_fast(inside)[1] - 1.0) < 1e-12
        poking = FunctionalSample(
            grid=grid, values=np.array([[0.0] * 4, [1, 1, 1, 4], [3.0] * 4])
        )
        assert mbd_all_fast(poking)[1] < 1.0

    def test_counting_formula_bottom_curve(self, constant_sample_123):
        # bottom curve: 2 strictly above, 0 below at every t
        # covering pairs = C(3,2) - C(2,2) - C(0,2) = 2 of 3
        assert abs(mbd_all_fast(constant_sample_123)[0] - 2 / 3) < 1e-12


class TestOracleEquivalence:
    @pytest.mark.parametrize("seed", range(12))
    @pytest.mark.parametrize("ties", [False, True])
    def test_fast_equals_oracle(self, seed, ties):
        rng = np.random.default_rng(seed)
        s = random_sample(rng, ties=ties)
        assert np.allclose(mbd_all_fast(s), mbd_all_oracle(s), atol=1e-12, rtol=0)

    def test_fast_equals_oracle_irregular_grid(self, rng, irregular_grid):
        s = FunctionalSample(grid=irregular_grid, values=rng.normal(size=(10, 5)))
        assert np.allclose(mbd_all_fast(s), mbd_all_oracle(s), atol=1e-12, rtol=0)


def identity_gap(sample) -> float:
    """Max violation of mbd = a0 + a1*mei + a2*cross over the sample."""
    c = parabola_coefficients(sample.n)
    mbd = mbd_all_fast(sample)
    mei = mei_all(sample)
    worst = 0.0
    for i in range(sample.n):
        lhs = c.a0 + c.a1 * mei[i] + c.a2 * cross_term(sample, i)
        worst = max(worst, abs(lhs - mbd[i]))
    return worst


class TestIdentityAndBound:
    @pytest.mark.parametrize("seed", range(10))
    def test_identity_random_samples(self, seed):
        rng = np.random.default_rng(seed)
        assert identity_gap(random_sample(rng, ties=seed % 2 == 0)) < 1e-10

    @given(
        values=hnp.arrays(
            np.float64, shape=st.tuples(st.integers(3, 8), st.integers(2, 9)),
            elements=st.floats(-100, 100, allow_nan=False),
        )
    )
    @settings(max_examples=200, deadline=None)
    def test_identity_holds_for_arbitrary_matrices(self, values):
        s = FunctionalSample(grid=equidistant_grid(values.shape[1]), values=values)
        assert identity_gap(s) < 1e-10

    @pytest.mark.parametrize("seed", range(10))
    def test_parabola_bound(self, seed):
        rng = np.random.default_rng(seed)
        s = random_sample(rng, ties=True)
        c = parabola_coefficients(s.n)
        gap = parabola_value(c, mei_all(s)) - mbd_all_fast(s)
        assert np.all(gap >= -1e-9)

    @pytest.mark.parametrize("seed", range(10))
    def test_equality_for_non_crossing_samples(self, seed):
        rng = np.random.default_rng(seed)
        s = non_crossing_sample(rng)
        c = parabola_coefficients(s.n)
        gap = parabola_value(c, mei_all(s)) - mbd_all_fast(s)
        assert np.max(np.abs(gap)) < 1e-10

    def test_mei_range(self, rng):
        for _ in range(5):
            s = random_sample(rng, ties=True)
            mei = mei_all(s)
            assert np.all(mei >= 1 / s.n - 1e-12)
            assert np.all(mei <= 1.0 + 1e-12)


class TestInvariances:
    def test_common_additive_function(self, rng):
        s = random_sample(rng, n=9, p=14)
        shift = np.sin(np.linspace(0, 3, 14)) * 10 + 5
        s2 = FunctionalSample(grid=s.grid, values=s.values + shift)
        assert np.allclose(mbd_all_fast(s), mbd_all_fast(s2), atol=1e-12)
        assert np.allclose(mei_all(s), mei_all(s2), atol=1e-12)

    def test_common_positive_scaling(self, rng):
        s = random_sample(rng, n=9, p=14)
        s2 = FunctionalSample(grid=s.grid, values=s.values * 37.5)
        assert np.allclose(mbd_all_fast(s), mbd_all_fast(s2), atol=1e-12)
        assert np.allclose(mei_all(s), mei_all(s2), atol=1e-12)

    def test_permutation_equivariance(self, rng):
        s = random_sample(rng, n=11, p=9, ties=True)
        perm = rng.permutation(11)
        s2 = FunctionalSample(grid=s.grid, values=s.values[perm])
        assert np.allclose(mbd_all_fast(s)[perm], mbd_all_fast(s2), atol=1e-12)
        assert np.allclose(mei_all(s)[perm], mei_all(s2), atol=1e-12)
