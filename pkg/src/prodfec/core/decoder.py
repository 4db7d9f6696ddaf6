"""Iterative product decoders: hard-decision iBDD and soft-assisted iBDD-SR.

The decoder keeps three 255x255 matrices: the working hard decisions (data memory),
and the read-only channel hard decisions and reliability flags (reliability memory).
Passes update the data memory in place, so a column pass sees the row pass before it.

In an iBDD-SR pass the component decoder output is combined per bit with the channel:
reliable bits keep their channel decision, unreliable bits take the decoded bit, and
on a component failure an unreliable bit either keeps its current value
(``FailureMode.HARDWARE_KEEP``) or returns to the channel decision
(``FailureMode.STRICT_RESET``).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
import numpy.typing as npt

from prodfec.core import bch
from prodfec.core.bch import BddKind, Bits
from prodfec.core.channel import QuantizedBlock
from prodfec.core.errors import CodeLengthError
from prodfec.core.models import Algorithm, DecodeReport, DecoderConfig, FailureMode
from prodfec.core.product import N, extract_systematic, is_valid_block

logger = logging.getLogger(__name__)


class Axis(str, Enum):
    ROWS = "rows"
    COLUMNS = "columns"


@dataclass
class DecoderState:
    """Data memory plus the immutable channel memories of one block."""

    data: Bits
    channel_hd: Bits
    reliable: npt.NDArray[np.bool_]

    @classmethod
    def from_quantized(cls, q: QuantizedBlock) -> DecoderState:
        if q.hd.shape != (N, N):
            raise CodeLengthError(f"expected a ({N}, {N}) block, got shape {q.hd.shape}")
        channel_hd = np.array(q.hd, dtype=np.uint8)
        reliable = np.array(q.reliable, dtype=np.bool_)
        channel_hd.flags.writeable = False
        reliable.flags.writeable = False
        return cls(data=channel_hd.copy(), channel_hd=channel_hd, reliable=reliable)

    def along(self, axis: Axis) -> tuple[Bits, Bits, npt.NDArray[np.bool_]]:
        """(data, channel_hd, reliable) with one component word per row."""
        if axis is Axis.ROWS:
            return self.data, self.channel_hd, self.reliable
        return self.data.T, self.channel_hd.T, self.reliable.T

    def mask_holds(self) -> bool:
        """Data equals the channel decision at every reliable position."""
        return bool(np.array_equal(self.data[self.reliable], self.channel_hd[self.reliable]))


@dataclass
class PassStatistics:
    component_decodes: int = 0
    gated_decodes: int = 0
    corrected_words: int = 0
    failures: int = 0
    corrections_applied: int = 0
    masked_corrections: int = 0
    bits_written: int = 0

    def __iadd__(self, other: PassStatistics) -> PassStatistics:
        for name in self.__dataclass_fields__:
            setattr(self, name, getattr(self, name) + getattr(other, name))
        return self


def sr_message(mu: int, L_hd: int, reliable: bool, current: int, mode: FailureMode) -> int:
    """
    Bit written back for one position by an iBDD-SR pass.

    Args:
        mu: component decoder result, +1 / -1 for a decoded 0 / 1, 0 on failure
        L_hd: channel hard decision
        reliable: channel reliability flag
        current: bit currently in the data memory
        mode: behaviour on component failure

    Returns:
        The channel decision if reliable, otherwise B(mu), otherwise (failure)
        the current bit or the channel decision depending on ``mode``
    """
    if reliable:
        return L_hd
    if mu != 0:
        return 0 if mu > 0 else 1
    return current if mode is FailureMode.HARDWARE_KEEP else L_hd


def sr_messages(
    mu: npt.ArrayLike,
    hd: npt.ArrayLike,
    reliable: npt.ArrayLike,
    current: npt.ArrayLike,
    mode: FailureMode,
) -> Bits:
    """Elementwise ``sr_message``."""
    mu = np.asarray(mu)
    hd = np.asarray(hd, dtype=np.uint8)
    fallback = np.asarray(current, dtype=np.uint8) if mode is FailureMode.HARDWARE_KEEP else hd
    decided = (mu < 0).astype(np.uint8)
    return np.where(
        np.asarray(reliable, dtype=np.bool_), hd, np.where(mu != 0, decided, fallback)
    ).astype(np.uint8)


def row_pass(
    state: DecoderState,
    axis: Axis,
    algorithm: Algorithm,
    mode: FailureMode = FailureMode.HARDWARE_KEEP,
) -> PassStatistics:
    """
    Decode all 255 component words along ``axis`` and write the results back.

    Words with a zero syndrome are gated (not decoded). iBDD writes corrected words
    and leaves failed ones alone; iBDD-SR writes ``sr_message`` for every bit of every
    decoded word.
    """
    data, hd, reliable = state.along(axis)
    s = bch.syndromes_batch(data)
    active = np.flatnonzero(s.any(axis=1))
    stats = PassStatistics(component_decodes=int(active.size), gated_decodes=N - int(active.size))
    if active.size == 0:
        return stats

    words = data[active]
    outcome = bch.bdd_decode_batch(words, s[active])
    failed = outcome.kind == BddKind.FAILURE
    stats.corrected_words = int(np.count_nonzero(outcome.kind == BddKind.CORRECTED))
    stats.failures = int(np.count_nonzero(failed))
    decoded = words ^ outcome.flips.astype(np.uint8)

    if algorithm is Algorithm.IBDD:
        updated = decoded
        stats.corrections_applied = int(np.count_nonzero(outcome.flips))
    else:
        rel = reliable[active]
        mu = bch.mu_values(decoded, failed[:, np.newaxis])
        updated = sr_messages(mu, hd[active], rel, words, mode)
        stats.corrections_applied = int(np.count_nonzero(outcome.flips & ~rel))
        stats.masked_corrections = int(np.count_nonzero(outcome.flips & rel))

    stats.bits_written = int(np.count_nonzero(updated != words))
    data[active] = updated
    return stats


def decode(q: QuantizedBlock, cfg: DecoderConfig) -> tuple[Bits, DecodeReport]:
    """
    Decode one quantized block.

    Runs ``cfg.sr_iterations`` iBDD-SR iterations followed by plain iBDD iterations
    (all iBDD for ``Algorithm.IBDD``, which ignores the reliability flags). With early
    termination, stops after the first iteration that leaves a valid block.

    Returns:
        (decoded 255x255 bit matrix, report)
    """
    state = DecoderState.from_quantized(q)
    totals = PassStatistics()
    per_iteration: list[int] = []
    iterations_run = sr_run = cleanup_run = 0
    valid = False

    for algorithm in cfg.schedule():
        written = 0
        for axis in (Axis.ROWS, Axis.COLUMNS):
            stats = row_pass(state, axis, algorithm, cfg.sr_failure_mode)
            if algorithm is Algorithm.IBDD_SR:
                assert state.mask_holds(), f"reliable bit changed in SR {axis.value} pass"
            written += stats.bits_written
            totals += stats
        iterations_run += 1
        if algorithm is Algorithm.IBDD_SR:
            sr_run += 1
        else:
            cleanup_run += 1
        per_iteration.append(written)
        if cfg.early_termination:
            valid = is_valid_block(state.data)
            if valid:
                break
    else:
        valid = is_valid_block(state.data)

    logger.debug(
        "decoded block in %d iterations, %d corrections, %d masked, valid=%s",
        iterations_run,
        totals.corrections_applied,
        totals.masked_corrections,
        valid,
    )
    report = DecodeReport(
        iterations_run=iterations_run,
        terminated_early=iterations_run < cfg.total_iterations,
        corrections_applied=totals.corrections_applied,
        masked_corrections=totals.masked_corrections,
        success=valid,
        sr_iterations=sr_run if cfg.algorithm is Algorithm.IBDD_SR else 0,
        cleanup_iterations=cleanup_run if cfg.algorithm is Algorithm.IBDD_SR else 0,
        component_decodes=totals.component_decodes,
        corrected_words=totals.corrected_words,
        gated_decodes=totals.gated_decodes,
        bdd_failures=totals.failures,
        per_iteration_corrections=per_iteration,
    )
    return state.data, report


def extract_info(decoded: npt.ArrayLike) -> Bits:
    """The systematic 231x231 region of a decoded block."""
    return extract_systematic(decoded)
