"""Output formatting utilities for CLI.

Progress, logs and errors go to stderr (``error_console``) so that stdout can carry
sweep data alone.
"""

import json
import logging
from typing import Any

from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from prodfec.core.models import BenchResult, NcgEstimate, SweepResult, ThresholdFit

console = Console()
error_console = Console(stderr=True)


def configure_logging(verbose: bool) -> None:
    """Route library logging through Rich on stderr."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=error_console, show_path=False)],
        force=True,
    )


def format_json(data: Any) -> None:
    """
    Format data as JSON for machine-readable output.

    Args:
        data: Data to format (will be serialized to JSON)
    """
    print(json.dumps(data, indent=2, default=str))


def format_error(message: str) -> None:
    """
    Format error message with Rich styling.

    Args:
        message: Error message to display
    """
    error_console.print(f"[red]Error:[/red] {message}")


def sweep_table(result: SweepResult, title: str = "BER sweep") -> Table:
    table = Table(title=title)
    table.add_column("Eb/N0 (dB)", style="cyan", justify="right")
    table.add_column("Blocks", justify="right")
    table.add_column("Bit errors", justify="right")
    table.add_column("Block errors", justify="right")
    table.add_column("Output BER", style="green", justify="right")
    table.add_column("Channel BER", justify="right")
    table.add_column("Iterations", justify="right")
    table.add_column("Time (s)", style="dim", justify="right")

    for p in result.points:
        table.add_row(
            f"{p.ebn0_db:.2f}",
            str(p.blocks),
            str(p.bit_errors),
            str(p.block_errors),
            f"{p.output_ber:.3e}",
            f"{p.channel_ber_measured:.3e}",
            f"{p.mean_iterations:.2f}",
            f"{p.wall_time_s:.1f}",
        )
    return table


def ncg_table(estimates: list[NcgEstimate]) -> Table:
    table = Table(title="Net coding gain")
    table.add_column("Threshold (dB)", style="cyan", justify="right")
    table.add_column("Target BER", justify="right")
    table.add_column("NCG (dB)", style="green", justify="right")
    table.add_column("Method")

    for e in estimates:
        method = f"{e.method} (approximate)" if e.approximate else e.method
        table.add_row(
            f"{e.threshold_ebn0_db:.3f}", f"{e.target_ber:.0e}", f"{e.ncg_db:.2f}", method
        )
    return table


def fit_table(fit: ThresholdFit) -> Table:
    table = Table(title="Waterfall extrapolation")
    table.add_column("Parameter", style="cyan")
    table.add_column("Value", justify="right")
    table.add_row("a", f"{fit.a:.5f}")
    table.add_row("b", f"{fit.b:.5f}")
    table.add_row("points used", str(fit.points_used))
    table.add_row("RMS residual (decades)", f"{fit.rms_residual_decades:.3f}")
    table.add_row("threshold (dB)", f"[green]{fit.threshold_ebn0_db:.3f}[/green]")
    return table


def bench_table(result: BenchResult) -> Table:
    table = Table(title="Decoder throughput")
    table.add_column("Metric", style="cyan")
    table.add_column("Value", justify="right")
    table.add_row("algorithm", result.decoder.algorithm.value)
    table.add_row("iterations", str(result.decoder.total_iterations))
    table.add_row("Eb/N0 (dB)", "noiseless" if result.noiseless else f"{result.ebn0_db:.2f}")
    table.add_row("blocks", str(result.blocks))
    table.add_row("info Mb/s", f"{result.info_bits_per_second / 1e6:.3f}")
    table.add_row("blocks/s", f"{result.blocks_per_second:.2f}")
    table.add_row("mean corrections", f"{result.mean_corrections:.1f}")
    table.add_row("mean iterations", f"{result.mean_iterations:.2f}")
    return table
