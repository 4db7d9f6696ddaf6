"""BPSK over AWGN with a two-bit output: a hard decision and a reliability flag.

The channel output ``y = modulate(bit) + noise`` is used unscaled as the reliability
``L``. A symbol is reliable when ``|L| >= w``.

Random streams are derived from ``(seed, point_index, block_index)`` through
``numpy.random.SeedSequence`` spawn keys, so a block's data and noise do not depend
on which worker simulates it or in what order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
import numpy.typing as npt
from scipy.special import erfc, ndtr

from prodfec.core.bch import Bits
from prodfec.core.models import ChannelConfig


class QuantizedSymbol(NamedTuple):
    hd: int
    reliable: bool


@dataclass(frozen=True)
class QuantizedBlock:
    """Channel hard decisions and reliability flags of one block (same shape)."""

    hd: Bits
    reliable: npt.NDArray[np.bool_]

    def __post_init__(self) -> None:
        if self.hd.shape != self.reliable.shape:
            raise ValueError(
                f"hard decisions {self.hd.shape} and reliability {self.reliable.shape} differ"
            )


def q_function(x: npt.ArrayLike) -> npt.NDArray[np.float64]:
    """Gaussian tail probability Q(x)."""
    return np.asarray(0.5 * erfc(np.asarray(x, dtype=np.float64) / np.sqrt(2.0)))


def block_streams(
    seed: int, point_index: int, block_index: int
) -> tuple[np.random.Generator, np.random.Generator]:
    """Independent (data, noise) generators for one block of one sweep point."""
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(point_index, block_index))
    data_seq, noise_seq = sequence.spawn(2)
    return np.random.default_rng(data_seq), np.random.default_rng(noise_seq)


def modulate(bit: npt.ArrayLike) -> npt.NDArray[np.float64]:
    """0 -> +1.0, 1 -> -1.0."""
    return 1.0 - 2.0 * np.asarray(bit, dtype=np.float64)


def transmit(
    block: npt.ArrayLike,
    cfg: ChannelConfig,
    *,
    point_index: int = 0,
    block_index: int = 0,
    rng: np.random.Generator | None = None,
) -> npt.NDArray[np.float64]:
    """
    Send a bit matrix through the channel.

    Args:
        block: bits to send
        cfg: channel configuration (Eb/N0 is per information bit)
        point_index: sweep point, part of the noise stream key
        block_index: block number, part of the noise stream key
        rng: explicit noise generator, overriding the derived stream

    Returns:
        Raw channel outputs L, same shape as ``block``
    """
    symbols = modulate(block)
    if cfg.noiseless:
        return symbols
    if rng is None:
        _, rng = block_streams(cfg.seed, point_index, block_index)
    return symbols + rng.normal(0.0, cfg.sigma, size=symbols.shape)


def quantize(L: float, w: float) -> QuantizedSymbol:
    """Hard decision (L < 0 -> 1) and reliability (|L| >= w) of one channel output."""
    if w <= 0:
        raise ValueError(f"w must be positive, got {w}")
    return QuantizedSymbol(hd=int(L < 0), reliable=bool(abs(L) >= w))


def quantize_block(L: npt.ArrayLike, w: float) -> QuantizedBlock:
    if w <= 0:
        raise ValueError(f"w must be positive, got {w}")
    values = np.asarray(L, dtype=np.float64)
    return QuantizedBlock(
        hd=(values < 0).astype(np.uint8),
        reliable=np.abs(values) >= w,
    )


def channel_ber(cfg: ChannelConfig) -> float:
    """Analytic hard-decision error probability Q(sqrt(2 R Eb/N0))."""
    if cfg.noiseless:
        return 0.0
    return float(q_function(1.0 / cfg.sigma))


def unreliable_fraction(cfg: ChannelConfig) -> float:
    """Analytic P(|y| < w) for a transmitted +1."""
    if cfg.noiseless:
        return 0.0 if cfg.w <= 1.0 else 1.0
    sigma = cfg.sigma
    return float(ndtr((cfg.w - 1.0) / sigma) - ndtr((-cfg.w - 1.0) / sigma))
