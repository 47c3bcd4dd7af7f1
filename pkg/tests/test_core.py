import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from tsagg.core import denormalize, normalize, to_periods, validate_and_build
from tsagg.errors import ConfigError, DataError

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)


def matrices(min_rows=2, max_rows=30, max_cols=4):
    return st.integers(min_rows, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: arrays(np.float64, (r, c), elements=finite)))


def make_set(values):
    values = np.asarray(values, dtype=np.float64)
    names = [f"a{i}" for i in range(values.shape[1])]
    return validate_and_build(values, names, 1.0)


class TestValidateAndBuild:
    def test_year_of_hourly_load(self):
        ts = validate_and_build(np.ones((8760, 1)), ["load"], 1.0)
        assert ts.n_steps == 8760
        assert ts.n_attributes == 1

    def test_nan_rejected_with_position(self):
        values = np.zeros((4, 2))
        values[2, 1] = np.nan
        with pytest.raises(DataError, match=r"row 2, column 1"):
            validate_and_build(values, ["a", "b"], 1.0)

    def test_inf_rejected(self):
        with pytest.raises(DataError):
            validate_and_build([[1.0], [np.inf]], ["a"], 1.0)

    def test_duplicate_names_rejected(self):
        with pytest.raises(DataError, match="duplicate"):
            validate_and_build(np.zeros((3, 2)), ["a", "a"], 1.0)

    def test_name_count_mismatch(self):
        with pytest.raises(DataError):
            validate_and_build(np.zeros((3, 2)), ["a"], 1.0)

    def test_nonpositive_resolution(self):
        with pytest.raises(DataError):
            validate_and_build(np.zeros((3, 1)), ["a"], 0.0)


class TestNormalize:
    def test_minmax_simple(self):
        normalized, params = normalize(make_set([[2.0], [4.0], [6.0]]), "minmax")
        assert normalized.ravel().tolist() == [0.0, 0.5, 1.0]
        assert params.offset[0] == 2.0 and params.scale[0] == 4.0

    def test_minmax_constant_attribute(self):
        normalized, params = normalize(make_set([[5.0], [5.0], [5.0]]), "minmax")
        assert normalized.ravel().tolist() == [0.0, 0.0, 0.0]
        assert params.offset[0] == 5.0 and params.scale[0] == 1.0

    def test_znorm_two_points(self):
        # sample std (ddof=1) of [0, 2] is sqrt(2), so values map to -+1/sqrt(2)
        normalized, _ = normalize(make_set([[0.0], [2.0]]), "znorm")
        np.testing.assert_allclose(
            normalized.ravel(), [-1 / np.sqrt(2), 1 / np.sqrt(2)], atol=1e-14)

    def test_unknown_method(self):
        with pytest.raises(ConfigError):
            normalize(make_set([[1.0], [2.0]]), "scale")

    @settings(max_examples=60, deadline=None)
    @given(matrices())
    def test_minmax_range(self, values):
        normalized, _ = normalize(make_set(values), "minmax")
        assert normalized.min() >= 0.0
        assert normalized.max() <= 1.0
        for a in range(values.shape[1]):
            col = values[:, a]
            if col.max() > col.min():
                assert normalized[:, a].min() == 0.0
                assert normalized[:, a].max() == 1.0

    @settings(max_examples=60, deadline=None)
    @given(matrices(min_rows=3))
    def test_znorm_moments(self, values):
        normalized, _ = normalize(make_set(values), "znorm")
        assert np.all(np.isfinite(normalized))
        for a in range(values.shape[1]):
            col = values[:, a]
            if col.max() == col.min():
                assert np.all(normalized[:, a] == 0.0)
            elif col.std(ddof=1) > 1e-100:  # away from variance underflow
                assert abs(normalized[:, a].mean()) < 1e-10
                assert abs(normalized[:, a].std(ddof=1) - 1.0) < 1e-10


class TestDenormalize:
    def test_inverts_minmax(self):
        _, params = normalize(make_set([[2.0], [4.0], [6.0]]), "minmax")
        restored = denormalize(np.array([[0.0], [0.5], [1.0]]), params)
        assert restored.ravel().tolist() == [2.0, 4.0, 6.0]

    def test_constant_attribute_restored(self):
        _, params = normalize(make_set([[5.0], [5.0], [5.0]]), "minmax")
        restored = denormalize(np.zeros((3, 1)), params)
        assert restored.ravel().tolist() == [5.0, 5.0, 5.0]

    def test_dimension_mismatch(self):
        _, params = normalize(make_set([[1.0, 2.0], [3.0, 4.0]]), "minmax")
        with pytest.raises(DataError):
            denormalize(np.zeros((2, 3)), params)

    @settings(max_examples=60, deadline=None)
    @given(matrices(), st.sampled_from(["minmax", "znorm"]))
    def test_round_trip(self, values, method):
        ts = make_set(values)
        normalized, params = normalize(ts, method)
        restored = denormalize(normalized, params)
        # tolerance is relative to each attribute's magnitude
        for a in range(values.shape[1]):
            tol = 1e-12 * max(1.0, np.abs(values[:, a]).max())
            assert np.abs(restored[:, a] - values[:, a]).max() <= tol


class TestToPeriods:
    def setup_method(self):
        _, self.params = normalize(make_set([[0.0], [1.0]]), "minmax")

    def test_daily_periods_of_a_year(self):
        frame = to_periods(np.zeros((8760, 1)), 24, self.params)
        assert frame.n_periods == 365
        assert frame.steps_per_period == 24

    def test_non_divisible_rejected(self):
        with pytest.raises(ConfigError, match="remainder 1"):
            to_periods(np.zeros((10, 1)), 3, self.params)

    def test_drop_trailing(self):
        frame = to_periods(np.zeros((10, 1)), 3, self.params, drop_trailing=True)
        assert frame.n_periods == 3
        assert frame.dropped_steps == 1

    def test_column_layout(self):
        # step-major, attribute-minor: (t, a) -> column t * N_a + a
        _, params = normalize(make_set(np.zeros((2, 2))), "minmax")
        data = np.array([[1.0, 2.0], [3.0, 4.0], [5.0, 6.0], [7.0, 8.0]])
        frame = to_periods(data, 2, params)
        assert frame.rows[0].tolist() == [1.0, 2.0, 3.0, 4.0]
        assert frame.rows[1].tolist() == [5.0, 6.0, 7.0, 8.0]

    @settings(max_examples=40, deadline=None)
    @given(st.integers(1, 6), st.integers(1, 8), st.integers(1, 3), st.data())
    def test_unroll_is_lossless(self, n_periods, steps, n_attrs, data):
        values = data.draw(arrays(np.float64, (n_periods * steps, n_attrs),
                                  elements=finite))
        ts = make_set(values)
        normalized, params = normalize(ts, "minmax")
        frame = to_periods(normalized, steps, params)
        assert np.array_equal(frame.unrolled(), normalized)
