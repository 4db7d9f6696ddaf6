"""Selftest command: fast structural checks of the code and decoder."""

from collections.abc import Callable

import numpy as np
import typer
from rich.table import Table

from prodfec.core import bch, galois, product
from prodfec.core.channel import quantize_block, transmit
from prodfec.core.decoder import decode, extract_info
from prodfec.core.models import ChannelConfig, DecoderConfig
from prodfec.sim.ncg import ncg
from prodfec.utils.formatters import console, format_error

Check = Callable[[], str]


def _field_order() -> str:
    powers = galois.EXP_TABLE[: galois.FIELD_ORDER]
    assert len(set(powers.tolist())) == galois.FIELD_ORDER, "alpha is not primitive"
    assert galois.gf_pow(galois.ALPHA, galois.FIELD_ORDER) == 1
    return f"alpha has order {galois.FIELD_ORDER}"


def _generator_degree() -> str:
    degree = bch.build_generator().degree
    assert degree == bch.PARITY_BITS, f"degree {degree}"
    return f"deg g(x) = {degree}"


def _corrects_t_errors() -> str:
    rng = np.random.default_rng(1)
    word = bch.encode(rng.integers(0, 2, bch.K, dtype=np.uint8))
    positions = rng.choice(bch.N, size=bch.T, replace=False)
    received = word.copy()
    received[positions] ^= 1
    outcome = bch.bdd_decode(received)
    assert outcome.kind is bch.BddKind.CORRECTED, f"got {outcome.kind.name}"
    assert outcome.flips == frozenset(int(p) for p in positions)
    return f"{bch.T} errors at {sorted(outcome.flips)} corrected"


def _product_validity() -> str:
    info = product.random_info_block(np.random.default_rng(2))
    block = product.encode_block(info)
    assert product.is_valid_block(block), "encoded block has nonzero syndromes"
    assert np.array_equal(block, product.encode_block_columns_first(info))
    return "row-first and column-first encodings agree"


def _noiseless_decode() -> str:
    info = product.random_info_block(np.random.default_rng(3))
    block = product.encode_block(info)
    q = quantize_block(transmit(block, ChannelConfig(noiseless=True)), ChannelConfig().w)
    decoded, report = decode(q, DecoderConfig())
    assert np.array_equal(extract_info(decoded), info)
    assert report.corrections_applied == 0
    return f"valid after {report.iterations_run} iteration(s), no corrections"


def _ncg_arithmetic() -> str:
    gain = ncg(4.6).ncg_db
    assert abs(gain - 10.39) < 0.02, f"NCG {gain:.3f} dB"
    return f"NCG at 4.6 dB = {gain:.2f} dB"


CHECKS: list[tuple[str, Check]] = [
    ("GF(2^8) field order", _field_order),
    ("BCH generator degree", _generator_degree),
    ("t-error correction", _corrects_t_errors),
    ("product code validity", _product_validity),
    ("noiseless decode", _noiseless_decode),
    ("NCG arithmetic", _ncg_arithmetic),
]


def selftest_command() -> None:
    """
    Run fast structural checks.

    Exits with code 1 if any check fails.
    """
    table = Table(title="Self test")
    table.add_column("Check", style="cyan")
    table.add_column("Result")
    table.add_column("Detail", style="dim")

    failed = 0
    for name, check in CHECKS:
        try:
            detail = check()
            table.add_row(name, "[green]✓ pass[/green]", detail)
        except Exception as e:
            failed += 1
            table.add_row(name, "[red]✗ fail[/red]", str(e) or type(e).__name__)

    console.print(table)
    if failed:
        format_error(f"{failed} of {len(CHECKS)} checks failed.")
        raise typer.Exit(1)
