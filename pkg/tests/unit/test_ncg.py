"""Tests for net coding gain arithmetic and waterfall extrapolation."""

import numpy as np
import pytest

from prodfec.core.channel import q_function
from prodfec.core.errors import FitError
from prodfec.core.models import PRODUCT_RATE, SweepResult
from prodfec.sim.ncg import (
    extrapolate_threshold,
    ncg,
    ncg_from_fit,
    q_inverse,
    uncoded_required_db,
)
from tests.fixtures.blocks import model_points


class TestUncodedReference:
    def test_q_inverse_at_target(self) -> None:
        assert float(q_inverse(1e-15)) == pytest.approx(7.9413, abs=1e-4)

    def test_q_inverse_inverts_q(self) -> None:
        x = np.linspace(0.1, 8.0, 40)
        np.testing.assert_allclose(q_inverse(q_function(x)), x, rtol=1e-7)

    def test_required_db_at_target(self) -> None:
        assert uncoded_required_db(1e-15) == pytest.approx(14.99, abs=0.01)

    def test_zero_db_point(self) -> None:
        assert uncoded_required_db(float(q_function(np.sqrt(2.0)))) == pytest.approx(0.0, abs=1e-6)

    def test_monotone_decreasing(self) -> None:
        targets = [1e-15, 1e-12, 1e-9, 1e-6, 1e-3, 0.1]
        required = [uncoded_required_db(t) for t in targets]
        assert required == sorted(required, reverse=True)

    @pytest.mark.parametrize("target", [0.0, 0.5, 1.0, -1e-3])
    def test_out_of_range(self, target: float) -> None:
        with pytest.raises(ValueError):
            uncoded_required_db(target)


class TestNcg:
    @pytest.mark.parametrize(("threshold", "expected"), [(4.6, 10.39), (4.9, 10.09)])
    def test_operating_points(self, threshold: float, expected: float) -> None:
        estimate = ncg(threshold, 1e-15)
        assert estimate.ncg_db == pytest.approx(expected, abs=0.01)
        assert estimate.method == "direct"
        assert not estimate.approximate

    def test_uncoded_threshold_has_no_gain(self) -> None:
        assert ncg(uncoded_required_db(1e-15)).ncg_db == pytest.approx(0.0, abs=1e-12)

    def test_bad_target_propagates(self) -> None:
        with pytest.raises(ValueError):
            ncg(4.6, 0.7)

    @pytest.mark.parametrize("threshold", [float("nan"), float("inf"), float("-inf")])
    def test_rejects_non_finite_threshold(self, threshold: float) -> None:
        with pytest.raises(ValueError):
            ncg(threshold)


class TestExtrapolation:
    def test_recovers_crossing_of_exact_model(self) -> None:
        a, b = 3.2, -5.0
        points = model_points(a, b, [4.4, 4.5, 4.6, 4.7, 4.8])
        fit = extrapolate_threshold(points, 1e-15)
        s_star = (float(q_inverse(1e-15)) - b) / a
        expected = 10.0 * np.log10(s_star**2 / (2.0 * PRODUCT_RATE))
        assert fit.threshold_ebn0_db == pytest.approx(expected, abs=0.01)
        assert fit.a == pytest.approx(a, rel=1e-3)
        assert fit.points_used == 5
        assert fit.rms_residual_decades < 1e-3
        assert fit.approximate

    def test_accepts_sweep_result_and_ignores_zero_points(self) -> None:
        points = model_points(3.2, -5.0, [4.4, 4.5, 4.6])
        zero = points[-1].model_copy(update={"ebn0_db": 5.0, "bit_errors": 0, "output_ber": 0.0})
        fit = extrapolate_threshold(SweepResult(points=[*points, zero]), 1e-12)
        assert fit.points_used == 3

    def test_needs_three_usable_points(self) -> None:
        points = model_points(3.2, -5.0, [4.4, 4.5])
        with pytest.raises(FitError):
            extrapolate_threshold(points)

    def test_all_zero_ber_refused(self) -> None:
        points = [
            p.model_copy(update={"bit_errors": 0, "output_ber": 0.0})
            for p in model_points(3.2, -5.0, [4.4, 4.5, 4.6])
        ]
        with pytest.raises(FitError):
            extrapolate_threshold(points)

    def test_increasing_ber_refused(self) -> None:
        points = model_points(-3.2, 5.0, [4.4, 4.5, 4.6, 4.7])
        with pytest.raises(FitError):
            extrapolate_threshold(points)

    def test_ncg_from_fit_is_approximate(self) -> None:
        fit = extrapolate_threshold(model_points(3.2, -5.0, [4.4, 4.5, 4.6, 4.7]))
        estimate = ncg_from_fit(fit)
        assert estimate.method == "extrapolated"
        assert estimate.approximate
        assert estimate.ncg_db == pytest.approx(
            uncoded_required_db(1e-15) - fit.threshold_ebn0_db
        )
