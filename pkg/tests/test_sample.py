import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from outliergram import (
    DepthRecord,
    FunctionalSample,
    equidistant_grid,
    load_csv,
    make_grid,
    write_csv,
)

from conftest import random_sample


class TestMakeGrid:
    def test_three_point_trapezoid(self):
        g = make_grid([0.0, 0.5, 1.0])
        assert np.allclose(g.weights, [0.25, 0.5, 0.25])

    def test_equidistant_trapezoid_weights(self):
        # direct composite-trapezoid computation: interior gaps are 1/49,
        # endpoints carry half a gap, then everything is normalized
        g = make_grid(np.linspace(0, 1, 50))
        assert abs(g.weights[0] - 1 / 98) < 1e-12
        assert abs(g.weights[-1] - 1 / 98) < 1e-12
        assert np.all(np.abs(g.weights[1:-1] - 1 / 49) < 1e-12)
        assert abs(g.weights.sum() - 1.0) < 1e-12

    def test_not_increasing_rejected(self):
        with pytest.raises(ValueError):
            make_grid([1.0, 0.5])

    def test_too_short_rejected(self):
        with pytest.raises(ValueError):
            make_grid([1.0])

    @given(
        pts=st.lists(
            st.floats(min_value=-50, max_value=50, allow_nan=False),
            min_size=2, max_size=12, unique=True,
        ),
        a=st.floats(min_value=0.01, max_value=100),
        b=st.floats(min_value=-1000, max_value=1000),
    )
    @settings(max_examples=100, deadline=None)
    def test_weights_invariant_under_affine_time_rescaling(self, pts, a, b):
        pts = sorted(pts)
        assume(min(np.diff(pts)) > 1e-3)  # rescaling must not collapse points
        g1 = make_grid(pts)
        g2 = make_grid([a * t + b for t in pts])
        assert np.allclose(g1.weights, g2.weights, atol=1e-9)

    def test_weight_validation(self):
        with pytest.raises(ValueError):
            # weights not summing to 1
            from outliergram import TimeGrid

            TimeGrid(points=np.array([0.0, 1.0]), weights=np.array([0.7, 0.7]))


class TestFunctionalSample:
    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            FunctionalSample(grid=equidistant_grid(4), values=np.zeros((2, 4)))

    def test_rejects_non_finite(self):
        vals = np.zeros((3, 4))
        vals[1, 2] = np.nan
        with pytest.raises(ValueError):
            FunctionalSample(grid=equidistant_grid(4), values=vals)

    def test_rejects_mismatched_grid(self):
        with pytest.raises(ValueError):
            FunctionalSample(grid=equidistant_grid(5), values=np.zeros((3, 4)))

    def test_immutable_values(self, rng):
        s = random_sample(rng)
        with pytest.raises(ValueError):
            s.values[0, 0] = 99.0

    def test_with_curve_replaces_one_row(self, rng):
        s = random_sample(rng, n=5, p=7)
        new = np.arange(7.0)
        s2 = s.with_curve(2, new)
        assert np.array_equal(s2.values[2], new)
        assert np.array_equal(s2.values[0], s.values[0])
        assert np.array_equal(s.values[2], s.values[2])  # original untouched


class TestDepthRecord:
    def test_distance_consistency_enforced(self):
        with pytest.raises(ValueError):
            DepthRecord(mbd=0.5, mei=0.5, parabola=0.9, distance=0.1)

    def test_negative_distance_beyond_slack_rejected(self):
        with pytest.raises(ValueError):
            DepthRecord(mbd=0.9, mei=0.5, parabola=0.8, distance=-0.1)


class TestCsv:
    def test_header_and_labels(self, tmp_path):
        f = tmp_path / "curves.csv"
        f.write_text("t,0,0.5,1\na,1,2,3\nb,4,5,6\nc,7,8,9\n")
        s = load_csv(f)
        assert s.n == 3 and s.p == 3
        assert s.labels == ("a", "b", "c")
        assert np.allclose(s.grid.points, [0, 0.5, 1])

    def test_header_without_labels(self, tmp_path):
        f = tmp_path / "curves.csv"
        f.write_text("t,0,0.5,1\n1,2,3\n4,5,6\n7,8,9\n")
        s = load_csv(f)
        assert s.n == 3 and s.p == 3
        assert np.allclose(s.values, [[1, 2, 3], [4, 5, 6], [7, 8, 9]])

    def test_no_header_defaults_to_unit_interval(self, tmp_path):
        f = tmp_path / "curves.csv"
        f.write_text("1,2,3,4\n5,6,7,8\n9,10,11,12\n")
        s = load_csv(f)
        assert s.p == 4
        assert np.allclose(s.grid.points, np.linspace(0, 1, 4))

    def test_too_few_curves(self, tmp_path):
        f = tmp_path / "two.csv"
        f.write_text("t,0,1\na,1,2\nb,3,4\n")
        with pytest.raises(ValueError, match="n < 3"):
            load_csv(f)

    def test_ragged_row(self, tmp_path):
        f = tmp_path / "ragged.csv"
        f.write_text("t,0,0.5,1\na,1,2,3\nb,4,5\nc,7,8,9\n")
        with pytest.raises(ValueError, match="ragged"):
            load_csv(f)

    def test_non_numeric_cell(self, tmp_path):
        f = tmp_path / "bad.csv"
        f.write_text("t,0,0.5,1\na,1,x,3\nb,4,5,6\nc,7,8,9\n")
        with pytest.raises(ValueError, match="non-numeric"):
            load_csv(f)

    def test_round_trip_bit_exact(self, tmp_path, rng):
        s = random_sample(rng, n=7, p=11)
        f = tmp_path / "rt.csv"
        write_csv(s, f)
        back = load_csv(f)
        assert np.array_equal(back.values, s.values)
        assert np.array_equal(back.grid.points, s.grid.points)

    def test_round_trip_irregular_grid(self, tmp_path, rng):
        from outliergram import FunctionalSample, make_grid

        grid = make_grid(np.sort(rng.uniform(0, 10, 9)))
        s = FunctionalSample(grid=grid, values=rng.normal(size=(4, 9)) * 1e7)
        f = tmp_path / "rt2.csv"
        write_csv(s, f)
        back = load_csv(f)
        assert np.array_equal(back.values, s.values)
        assert np.array_equal(back.grid.points, s.grid.points)
