"""Net coding gain arithmetic and waterfall extrapolation."""

from __future__ import annotations

import logging
import warnings
from collections.abc import Callable, Sequence

import numpy as np
import numpy.typing as npt
from scipy.optimize import OptimizeWarning, curve_fit
from scipy.special import erfcinv, log_ndtr

from prodfec.core.errors import FitError
from prodfec.core.models import PRODUCT_RATE, NcgEstimate, PointResult, SweepResult, ThresholdFit

logger = logging.getLogger(__name__)

MIN_FIT_POINTS = 3
NCG_TARGET_BER = 1e-15


def q_inverse(p: npt.ArrayLike) -> npt.NDArray[np.float64]:
    """Inverse Gaussian tail, Q^-1(p) = sqrt(2) erfcinv(2p)."""
    return np.asarray(np.sqrt(2.0) * erfcinv(2.0 * np.asarray(p, dtype=np.float64)))


def uncoded_required_db(target_ber: float) -> float:
    """
    Eb/N0 in dB that uncoded BPSK needs to reach ``target_ber``.

    Raises:
        ValueError: If ``target_ber`` is not in (0, 0.5)
    """
    if not 0.0 < target_ber < 0.5:
        raise ValueError(f"target BER must lie in (0, 0.5), got {target_ber}")
    q = float(q_inverse(target_ber))
    return float(10.0 * np.log10(q * q / 2.0))


def ncg(threshold_ebn0_db: float, target_ber: float = NCG_TARGET_BER) -> NcgEstimate:
    """
    Net coding gain of a code reaching ``target_ber`` at ``threshold_ebn0_db``.

    Raises:
        ValueError: If the target BER is outside (0, 0.5) or the threshold is not finite
    """
    return NcgEstimate(
        target_ber=target_ber,
        threshold_ebn0_db=threshold_ebn0_db,
        ncg_db=uncoded_required_db(target_ber) - threshold_ebn0_db,
    )


def _tail_argument(ebn0_db: npt.ArrayLike, rate: float) -> npt.NDArray[np.float64]:
    return np.sqrt(2.0 * rate * 10.0 ** (np.asarray(ebn0_db, dtype=np.float64) / 10.0))


def _log10_ber_model(
    rate: float,
) -> Callable[[npt.NDArray[np.float64], float, float], npt.NDArray[np.float64]]:
    def model(x: npt.NDArray[np.float64], a: float, b: float) -> npt.NDArray[np.float64]:
        # log Q(z) = log_ndtr(-z), stable deep in the tail.
        return np.asarray(log_ndtr(-(a * _tail_argument(x, rate) + b)) / np.log(10.0))

    return model


def extrapolate_threshold(
    points: SweepResult | Sequence[PointResult],
    target_ber: float = NCG_TARGET_BER,
    rate: float = PRODUCT_RATE,
) -> ThresholdFit:
    """
    Fit log10(BER) = log10(Q(a * sqrt(2 R Eb/N0) + b)) and solve for ``target_ber``.

    Only points with at least one bit error are used. The result is an approximate
    threshold; the fit is only as good as the statistics of the lowest points.

    Raises:
        FitError: Fewer than three usable points, a non-decreasing fit, or no crossing
    """
    rows = points.points if isinstance(points, SweepResult) else list(points)
    usable = sorted(
        (p for p in rows if p.bit_errors > 0 and p.output_ber > 0), key=lambda p: p.ebn0_db
    )
    if len(usable) < MIN_FIT_POINTS:
        raise FitError(
            f"need at least {MIN_FIT_POINTS} points with bit errors, got {len(usable)}"
        )
    if not 0.0 < target_ber < 0.5:
        raise FitError(f"target BER must lie in (0, 0.5), got {target_ber}")

    x = np.array([p.ebn0_db for p in usable])
    ber = np.array([p.output_ber for p in usable])
    y = np.log10(ber)

    # Linear in the Q^-1 domain; exact for data drawn from the model.
    a0, b0 = np.polyfit(_tail_argument(x, rate), q_inverse(ber), 1)
    model = _log10_ber_model(rate)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", OptimizeWarning)
            (a, b), _ = curve_fit(model, x, y, p0=(a0, b0), maxfev=10_000)
    except (RuntimeError, ValueError) as e:
        raise FitError(f"waterfall fit did not converge: {e}") from e

    if not a > 0:
        raise FitError(f"fitted BER is not decreasing in Eb/N0 over the data (a = {a:.4g})")
    s_target = (float(q_inverse(target_ber)) - b) / a
    if s_target <= 0:
        raise FitError("fitted curve never reaches the target BER")

    threshold = float(10.0 * np.log10(s_target**2 / (2.0 * rate)))
    rms = float(np.sqrt(np.mean((model(x, a, b) - y) ** 2)))
    logger.info(
        "fit a=%.4f b=%.4f over %d points, threshold %.3f dB at BER %.1e",
        a,
        b,
        len(usable),
        threshold,
        target_ber,
    )
    return ThresholdFit(
        a=float(a),
        b=float(b),
        rate=rate,
        target_ber=target_ber,
        threshold_ebn0_db=threshold,
        points_used=len(usable),
        rms_residual_decades=rms,
    )


def ncg_from_fit(fit: ThresholdFit) -> NcgEstimate:
    return NcgEstimate(
        target_ber=fit.target_ber,
        threshold_ebn0_db=fit.threshold_ebn0_db,
        ncg_db=uncoded_required_db(fit.target_ber) - fit.threshold_ebn0_db,
        method="extrapolated",
        approximate=True,
    )
