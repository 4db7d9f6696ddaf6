"""Product code with BCH(255,231) rows and columns.

Blocks are stored row-major as (255, 255) uint8 matrices. Information bits sit in
the top-left 231x231 region, row parity to the right, column parity at the bottom.
Columns are handled through the transposed view ``block.T``, so the same component
code runs on both axes.
"""

from __future__ import annotations

import numpy as np
import numpy.typing as npt

from prodfec.core import bch
from prodfec.core.errors import CodeLengthError
from prodfec.core.models import CodeParameters

N = bch.N
K = bch.K
BLOCK_BITS = N * N
INFO_BITS = K * K


def _as_info_block(info: npt.ArrayLike) -> bch.Bits:
    block = np.asarray(info, dtype=np.uint8)
    if block.shape != (K, K):
        raise CodeLengthError(f"expected a ({K}, {K}) info block, got shape {block.shape}")
    return block


def _as_product_block(block: npt.ArrayLike) -> bch.Bits:
    bits = np.asarray(block, dtype=np.uint8)
    if bits.shape != (N, N):
        raise CodeLengthError(f"expected a ({N}, {N}) block, got shape {bits.shape}")
    return bits


def random_info_block(rng: np.random.Generator) -> bch.Bits:
    """Uniformly distributed information bits."""
    return rng.integers(0, 2, size=(K, K), dtype=np.uint8)


def encode_block(info: npt.ArrayLike) -> bch.Bits:
    """Encode the 231 information rows, then all 255 resulting columns."""
    rows = bch.encode_batch(_as_info_block(info))
    return np.ascontiguousarray(bch.encode_batch(rows.T).T)


def encode_block_columns_first(info: npt.ArrayLike) -> bch.Bits:
    """Same block as ``encode_block``, built column pass first."""
    columns = bch.encode_batch(_as_info_block(info).T).T
    return np.ascontiguousarray(bch.encode_batch(columns))


def row_syndrome_flags(block: npt.ArrayLike) -> npt.NDArray[np.bool_]:
    """True for every row whose syndrome is nonzero."""
    return bch.syndromes_batch(_as_product_block(block)).any(axis=1)


def column_syndrome_flags(block: npt.ArrayLike) -> npt.NDArray[np.bool_]:
    return row_syndrome_flags(_as_product_block(block).T)


def is_valid_block(block: npt.ArrayLike) -> bool:
    """True iff every row and every column is a codeword."""
    bits = _as_product_block(block)
    return not (row_syndrome_flags(bits).any() or column_syndrome_flags(bits).any())


def extract_systematic(block: npt.ArrayLike) -> bch.Bits:
    return _as_product_block(block)[:K, :K].copy()


def code_parameters() -> CodeParameters:
    return CodeParameters(
        n=N,
        k=K,
        t=bch.T,
        block_bits=BLOCK_BITS,
        info_bits=INFO_BITS,
        rate=INFO_BITS / BLOCK_BITS,
        overhead=BLOCK_BITS / INFO_BITS - 1,
    )
