"""Builders for codewords, blocks and sweep points used across the tests."""

from collections.abc import Iterable, Sequence

import numpy as np

from prodfec.core import bch
from prodfec.core.channel import QuantizedBlock, q_function
from prodfec.core.models import PRODUCT_RATE, PointResult
from prodfec.core.product import INFO_BITS, encode_block, random_info_block


def random_codewords(rng: np.random.Generator, count: int) -> bch.Bits:
    return bch.encode_batch(rng.integers(0, 2, size=(count, bch.K), dtype=np.uint8))


def with_flips(word: bch.Bits, positions: Iterable[int]) -> bch.Bits:
    flipped = np.array(word, dtype=np.uint8)
    for p in positions:
        flipped[p] ^= 1
    return flipped


def clean_block(rng: np.random.Generator) -> tuple[bch.Bits, bch.Bits]:
    """(info, encoded block)."""
    info = random_info_block(rng)
    return info, encode_block(info)


def quantized_with_errors(
    block: bch.Bits,
    errors: Sequence[tuple[int, int]] = (),
    *,
    reliable_errors: bool = False,
) -> QuantizedBlock:
    """
    Channel output of ``block`` with hard-decision errors at ``errors``.

    Every correct position is reliable; the error positions are unreliable unless
    ``reliable_errors`` is set.
    """
    hd = np.array(block, dtype=np.uint8)
    reliable = np.ones(hd.shape, dtype=np.bool_)
    for r, c in errors:
        hd[r, c] ^= 1
        reliable[r, c] = reliable_errors
    return QuantizedBlock(hd=hd, reliable=reliable)


def model_points(
    a: float, b: float, ebn0_db: Sequence[float], rate: float = PRODUCT_RATE
) -> list[PointResult]:
    """Sweep points whose BER lies exactly on Q(a * sqrt(2 R Eb/N0) + b)."""
    points = []
    for x in ebn0_db:
        s = np.sqrt(2.0 * rate * 10.0 ** (x / 10.0))
        ber = float(q_function(a * s + b))
        points.append(
            PointResult(
                ebn0_db=x,
                blocks=1000,
                info_bits=1000 * INFO_BITS,
                bit_errors=max(1, round(ber * 1000 * INFO_BITS)),
                block_errors=100,
                output_ber=ber,
                output_bler=0.1,
                channel_ber_measured=1e-2,
                mean_iterations=5.0,
                wall_time_s=1.0,
            )
        )
    return points
