"""Long Monte Carlo checks against the published operating points.

Run with ``pytest --runslow``; these take minutes to tens of minutes.
"""

import os
from itertools import count

import pytest

from prodfec.core.channel import channel_ber
from prodfec.core.models import (
    Algorithm,
    ChannelConfig,
    DecoderConfig,
    PointResult,
    StopRule,
    SweepConfig,
    SweepResult,
)
from prodfec.core.product import INFO_BITS
from prodfec.sim.engine import bench_throughput, run_sweep
from prodfec.sim.ncg import extrapolate_threshold

pytestmark = pytest.mark.slow

WORKERS = os.cpu_count() or 1


def test_waterfall_point_at_4_5_db() -> None:
    blocks = -(-2_000_000_000 // INFO_BITS)
    cfg = SweepConfig(
        ebn0_points=[4.5],
        decoder=DecoderConfig(total_iterations=10),
        channel=ChannelConfig(seed=2024),
        stop=StopRule(min_block_errors=10**9, min_blocks=blocks, max_blocks=blocks),
        workers=WORKERS,
    )
    (point,) = run_sweep(cfg).points
    assert point.info_bits >= 2_000_000_000
    assert point.output_ber <= 1e-6


CURVE_POINTS = [4.2, 4.3, 4.4, 4.5, 4.6, 4.7, 4.8, 5.0]
ENOUGH_ERRORS = 100


@pytest.fixture(scope="module")
def curves() -> dict[Algorithm, SweepResult]:
    stop = StopRule(min_block_errors=ENOUGH_ERRORS, max_blocks=20_000)
    return {
        algorithm: run_sweep(
            SweepConfig(
                ebn0_points=CURVE_POINTS,
                decoder=DecoderConfig(algorithm=algorithm),
                channel=ChannelConfig(seed=11),
                stop=stop,
                workers=WORKERS,
            )
        )
        for algorithm in Algorithm
    }


def _at(result: SweepResult, ebn0_db: float) -> PointResult:
    return next(p for p in result.points if p.ebn0_db == ebn0_db)


def test_soft_assist_beats_hard_decision(curves: dict[Algorithm, SweepResult]) -> None:
    compared = 0
    for sr, hard in zip(curves[Algorithm.IBDD_SR].points, curves[Algorithm.IBDD].points):
        if hard.block_errors < ENOUGH_ERRORS:
            continue
        assert sr.output_ber < hard.output_ber, f"{sr.ebn0_db} dB"
        if sr.block_errors >= ENOUGH_ERRORS:
            compared += 1
    # At least two points where both curves carry statistics.
    assert compared >= 2


@pytest.mark.parametrize("algorithm", list(Algorithm))
def test_waterfall_drop_between_4_4_and_5_0_db(
    curves: dict[Algorithm, SweepResult], algorithm: Algorithm
) -> None:
    low, high = _at(curves[algorithm], 4.4), _at(curves[algorithm], 5.0)
    assert low.bit_errors > 0
    assert high.output_ber < 1e-2 * low.output_ber


def test_more_iterations_never_hurt() -> None:
    def ber(iterations: int) -> float:
        cfg = SweepConfig(
            ebn0_points=[4.7],
            decoder=DecoderConfig(total_iterations=iterations),
            channel=ChannelConfig(seed=31),
            stop=StopRule(min_block_errors=10**9, min_blocks=1000, max_blocks=1000),
            workers=WORKERS,
        )
        (point,) = run_sweep(cfg).points
        assert point.blocks == 1000
        return point.output_ber

    assert ber(10) <= ber(5)


def test_threshold_gap_between_decoders() -> None:
    stop = StopRule(min_block_errors=50, max_blocks=40_000)

    def threshold(algorithm: Algorithm, points: list[float]) -> float:
        cfg = SweepConfig(
            ebn0_points=points,
            decoder=DecoderConfig(algorithm=algorithm),
            channel=ChannelConfig(seed=21),
            stop=stop,
            workers=WORKERS,
        )
        return extrapolate_threshold(run_sweep(cfg), 1e-15).threshold_ebn0_db

    sr = threshold(Algorithm.IBDD_SR, [4.35, 4.40, 4.45, 4.50])
    hard = threshold(Algorithm.IBDD, [4.60, 4.65, 4.70, 4.75])
    assert 0.1 <= hard - sr <= 0.4


def test_same_result_for_one_and_eight_workers() -> None:
    cfg = SweepConfig(
        ebn0_points=[4.5, 4.6],
        channel=ChannelConfig(seed=5),
        stop=StopRule(min_block_errors=20, max_blocks=400),
    )
    serial = run_sweep(cfg)
    parallel = run_sweep(cfg.model_copy(update={"workers": 8}))
    for a, b in zip(serial.points, parallel.points):
        assert a.model_dump(exclude={"wall_time_s"}) == b.model_dump(exclude={"wall_time_s"})


def test_channel_ber_at_input_operating_point() -> None:
    cfg = SweepConfig(
        ebn0_points=[5.2],
        channel=ChannelConfig(seed=8),
        stop=StopRule(max_blocks=200),
        workers=WORKERS,
    )
    (point,) = run_sweep(cfg).points
    p = channel_ber(cfg.channel.model_copy(update={"ebn0_db": 5.2}))
    assert p == pytest.approx(1e-2, rel=0.02)
    assert abs(point.channel_ber_measured - p) < 3 * (p * (1 - p) / point.channel_bits) ** 0.5


def test_extrapolated_threshold_near_4_6_db() -> None:
    cfg = SweepConfig(
        ebn0_points=[4.40, 4.45, 4.50, 4.55],
        channel=ChannelConfig(seed=21),
        stop=StopRule(min_block_errors=50, max_blocks=40_000),
        workers=WORKERS,
    )
    fit = extrapolate_threshold(run_sweep(cfg), 1e-15)
    assert 4.4 <= fit.threshold_ebn0_db <= 4.8


def _wall_rate(decoder: DecoderConfig, ebn0_db: float, noiseless: bool = False) -> float:
    return bench_throughput(decoder, ebn0_db, 5.0, noiseless=noiseless).blocks_per_second


def test_throughput_scales_with_work() -> None:
    five = DecoderConfig(total_iterations=5, early_termination=False)
    ten = DecoderConfig(total_iterations=10, early_termination=False)
    assert _wall_rate(ten, 4.0) <= _wall_rate(five, 4.0)
    assert _wall_rate(DecoderConfig(), 5.2, noiseless=True) >= 3 * _wall_rate(ten, 4.0)


def test_fewer_corrections_at_higher_snr() -> None:
    def corrections(ebn0_db: float) -> float:
        clock = count(0.0, 1.0)
        return bench_throughput(
            DecoderConfig(), ebn0_db, 20.0, pool_blocks=20, clock=lambda: float(next(clock))
        ).mean_corrections

    assert corrections(5.2) > corrections(6.0)
