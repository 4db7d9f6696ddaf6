"""Monte Carlo BER sweeps and software throughput benchmark.

Every block is a pure function of ``(channel config, decoder config, point index,
block index)``. Workers simulate blocks speculatively in chunks; outcomes are merged
in block-index order and the point stops at the first block index that satisfies
the stop rule, so the counters do not depend on the worker count.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Callable, Iterator
from concurrent.futures import Executor, ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass

import numpy as np
from scipy.stats import binomtest

from prodfec.core.channel import block_streams, quantize_block, transmit
from prodfec.core.decoder import decode, extract_info
from prodfec.core.models import (
    DEFAULT_W,
    BenchResult,
    ChannelConfig,
    DecoderConfig,
    PointResult,
    StopRule,
    SweepConfig,
    SweepResult,
)
from prodfec.core.product import BLOCK_BITS, INFO_BITS, encode_block, random_info_block

logger = logging.getLogger(__name__)

BLOCKS_PER_TASK = 4

ProgressCallback = Callable[[int, int, int], None]
"""Called as (point_index, blocks_done, block_errors) after every merged chunk."""


@dataclass(frozen=True)
class BlockOutcome:
    bit_errors: int
    channel_errors: int
    iterations: int
    corrections: int

    @property
    def block_error(self) -> bool:
        return self.bit_errors > 0


def simulate_block(
    channel: ChannelConfig, decoder: DecoderConfig, point_index: int, block_index: int
) -> BlockOutcome:
    """Encode, transmit, quantize and decode one uniformly random block."""
    data_rng, noise_rng = block_streams(channel.seed, point_index, block_index)
    info = random_info_block(data_rng)
    block = encode_block(info)
    q = quantize_block(transmit(block, channel, rng=noise_rng), channel.w)
    decoded, report = decode(q, decoder)
    return BlockOutcome(
        bit_errors=int(np.count_nonzero(extract_info(decoded) != info)),
        channel_errors=int(np.count_nonzero(q.hd != block)),
        iterations=report.iterations_run,
        corrections=report.corrections_applied,
    )


def _simulate_range(
    channel: ChannelConfig, decoder: DecoderConfig, point_index: int, start: int, stop: int
) -> list[BlockOutcome]:
    return [simulate_block(channel, decoder, point_index, b) for b in range(start, stop)]


@contextmanager
def _executor(workers: int) -> Iterator[Executor | None]:
    if workers == 1:
        yield None
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield pool


def _is_done(stop: StopRule, blocks: int, block_errors: int) -> bool:
    if blocks >= stop.max_blocks:
        return True
    return block_errors >= stop.min_block_errors and blocks >= stop.min_blocks


def _summarize(ebn0_db: float, outcomes: list[BlockOutcome], wall_time_s: float) -> PointResult:
    blocks = len(outcomes)
    bit_errors = sum(o.bit_errors for o in outcomes)
    block_errors = sum(o.block_error for o in outcomes)
    channel_errors = sum(o.channel_errors for o in outcomes)
    info_bits = blocks * INFO_BITS
    channel_bits = blocks * BLOCK_BITS
    ci = binomtest(bit_errors, info_bits).proportion_ci(method="wilson")
    return PointResult(
        ebn0_db=ebn0_db,
        blocks=blocks,
        info_bits=info_bits,
        bit_errors=bit_errors,
        block_errors=block_errors,
        channel_bits=channel_bits,
        channel_errors=channel_errors,
        output_ber=bit_errors / info_bits,
        output_bler=block_errors / blocks,
        channel_ber_measured=channel_errors / channel_bits,
        mean_iterations=sum(o.iterations for o in outcomes) / blocks,
        wall_time_s=wall_time_s,
        ber_ci_low=float(ci.low),
        ber_ci_high=float(ci.high),
    )


def _run_point(
    cfg: SweepConfig,
    point_index: int,
    pool: Executor | None,
    on_progress: ProgressCallback | None,
) -> PointResult:
    channel = cfg.channel.model_copy(update={"ebn0_db": cfg.ebn0_points[point_index]})
    started = time.perf_counter()
    outcomes: list[BlockOutcome] = []
    block_errors = 0
    next_block = 0
    done = False

    while not done:
        tasks = []
        for _ in range(cfg.workers):
            start = next_block
            stop = min(start + BLOCKS_PER_TASK, cfg.stop.max_blocks)
            if start >= stop:
                break
            tasks.append((start, stop))
            next_block = stop

        if pool is None:
            chunks: Iterator[list[BlockOutcome]] = (
                _simulate_range(channel, cfg.decoder, point_index, a, b) for a, b in tasks
            )
        else:
            futures = [
                pool.submit(_simulate_range, channel, cfg.decoder, point_index, a, b)
                for a, b in tasks
            ]
            chunks = (f.result() for f in futures)

        for chunk in chunks:
            if done:
                break
            for outcome in chunk:
                if done:
                    break
                outcomes.append(outcome)
                block_errors += outcome.block_error
                done = _is_done(cfg.stop, len(outcomes), block_errors)
        if on_progress is not None:
            on_progress(point_index, len(outcomes), block_errors)

    result = _summarize(channel.ebn0_db, outcomes, time.perf_counter() - started)
    logger.info(
        "Eb/N0 %.2f dB: %d blocks, %d block errors, BER %.3e",
        result.ebn0_db,
        result.blocks,
        result.block_errors,
        result.output_ber,
    )
    return result


def run_sweep(cfg: SweepConfig, on_progress: ProgressCallback | None = None) -> SweepResult:
    """
    Simulate every Eb/N0 point of ``cfg``.

    A point stops once it has ``min_block_errors`` block errors and at least
    ``min_blocks`` blocks, or at ``max_blocks``.
    """
    logger.debug("sweep config: %s", cfg.model_dump_json())
    with _executor(cfg.workers) as pool:
        points = [_run_point(cfg, i, pool, on_progress) for i in range(len(cfg.ebn0_points))]
    return SweepResult(points=points)


def bench_throughput(
    decoder: DecoderConfig,
    ebn0_db: float,
    seconds: float,
    *,
    pool_blocks: int = 8,
    seed: int = 0,
    w: float | None = None,
    noiseless: bool = False,
    clock: Callable[[], float] = time.perf_counter,
) -> BenchResult:
    """
    Decode pre-generated quantized blocks round-robin for ``seconds`` of wall time.

    At least one block is always decoded. Only decoding is timed.
    """
    channel = ChannelConfig(
        ebn0_db=ebn0_db, w=DEFAULT_W if w is None else w, seed=seed, noiseless=noiseless
    )
    prepared = []
    for b in range(pool_blocks):
        data_rng, noise_rng = block_streams(seed, 0, b)
        block = encode_block(random_info_block(data_rng))
        prepared.append(quantize_block(transmit(block, channel, rng=noise_rng), channel.w))

    blocks = corrections = iterations = 0
    started = clock()
    elapsed = 0.0
    while blocks == 0 or elapsed < seconds:
        _, report = decode(prepared[blocks % pool_blocks], decoder)
        blocks += 1
        corrections += report.corrections_applied
        iterations += report.iterations_run
        elapsed = clock() - started

    elapsed = max(elapsed, 1e-9)
    return BenchResult(
        decoder=decoder,
        ebn0_db=ebn0_db,
        noiseless=noiseless,
        blocks=blocks,
        seconds=elapsed,
        info_bits_per_second=blocks * INFO_BITS / elapsed,
        blocks_per_second=blocks / elapsed,
        mean_corrections=corrections / blocks,
        mean_iterations=iterations / blocks,
    )
