"""Monte Carlo BER sweep command."""

from enum import Enum
from pathlib import Path
from typing import Optional

import typer
from pydantic import ValidationError
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn, TimeElapsedColumn

from prodfec.core.errors import SweepConfigError
from prodfec.core.models import (
    DEFAULT_W,
    Algorithm,
    ChannelConfig,
    DecoderConfig,
    FailureMode,
    StopRule,
    SweepConfig,
)
from prodfec.sim.engine import run_sweep
from prodfec.utils.formatters import error_console, format_error, sweep_table
from prodfec.utils.storage import build_manifest, manifest_path_for, write_csv, write_manifest
from prodfec.utils.validators import parse_ebn0


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


def build_sweep_config(
    ebn0: str,
    iterations: int,
    algorithm: Algorithm,
    failure_mode: FailureMode,
    cleanup_iterations: int,
    early_termination: bool,
    w: float,
    seed: int,
    min_block_errors: int,
    min_blocks: int,
    max_blocks: int,
    workers: int,
) -> SweepConfig:
    """
    Assemble a validated sweep configuration from CLI values.

    Raises:
        SweepConfigError: If the Eb/N0 grid is malformed
        pydantic.ValidationError: If any value violates a model constraint
    """
    return SweepConfig(
        ebn0_points=parse_ebn0(ebn0),
        decoder=DecoderConfig(
            total_iterations=iterations,
            algorithm=algorithm,
            sr_failure_mode=failure_mode,
            cleanup_ibdd_iterations=cleanup_iterations,
            early_termination=early_termination,
        ),
        channel=ChannelConfig(w=w, seed=seed),
        stop=StopRule(
            min_block_errors=min_block_errors, min_blocks=min_blocks, max_blocks=max_blocks
        ),
        workers=workers,
    )


def sweep_command(
    ebn0: str = typer.Option(
        ..., "--ebn0", help="Eb/N0 points in dB: start:step:stop or a comma-separated list"
    ),
    iterations: int = typer.Option(10, "--iterations", "-n", help="Total decoder iterations"),
    algorithm: Algorithm = typer.Option(Algorithm.IBDD_SR, "--algorithm", "-a"),
    failure_mode: FailureMode = typer.Option(
        FailureMode.HARDWARE_KEEP, "--failure-mode", help="SR behaviour on component failure"
    ),
    cleanup_iterations: int = typer.Option(
        2, "--cleanup-iterations", help="Trailing iBDD iterations for ibdd-sr"
    ),
    no_early_exit: bool = typer.Option(
        False, "--no-early-exit", help="Always run every iteration"
    ),
    w: float = typer.Option(DEFAULT_W, "--w", help="Reliability threshold"),
    seed: int = typer.Option(0, "--seed", help="Master seed (unsigned 64-bit)"),
    min_block_errors: int = typer.Option(100, "--min-block-errors"),
    min_blocks: int = typer.Option(1, "--min-blocks"),
    max_blocks: int = typer.Option(10_000, "--max-blocks"),
    workers: int = typer.Option(
        1, "--workers", "-j", envvar="PRODFEC_WORKERS", help="Worker processes"
    ),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output file (default stdout)"),
    fmt: OutputFormat = typer.Option(OutputFormat.CSV, "--format", "-f"),
) -> None:
    """
    Run a Monte Carlo BER sweep over Eb/N0.

    Data goes to --out or stdout; progress and the summary table go to stderr.
    With --format csv and --out, a JSON run manifest is written next to the CSV.
    """
    try:
        cfg = build_sweep_config(
            ebn0,
            iterations,
            algorithm,
            failure_mode,
            cleanup_iterations,
            not no_early_exit,
            w,
            seed,
            min_block_errors,
            min_blocks,
            max_blocks,
            workers,
        )
    except (SweepConfigError, ValidationError) as e:
        format_error(f"Invalid sweep configuration: {e}")
        raise typer.Exit(1)

    try:
        with Progress(
            TextColumn("[cyan]{task.description}"),
            BarColumn(),
            MofNCompleteColumn(),
            TextColumn("{task.fields[errors]} block errors"),
            TimeElapsedColumn(),
            console=error_console,
            transient=True,
        ) as progress:
            tasks = [
                progress.add_task(f"{x:.2f} dB", total=cfg.stop.max_blocks, errors=0)
                for x in cfg.ebn0_points
            ]

            def on_progress(point: int, blocks: int, block_errors: int) -> None:
                progress.update(tasks[point], completed=blocks, errors=block_errors)

            result = run_sweep(cfg, on_progress)

        error_console.print(sweep_table(result))
        manifest = build_manifest(cfg, result)
        if fmt is OutputFormat.JSON:
            write_manifest(manifest, out)
        else:
            write_csv(result, out)
            if out is not None:
                write_manifest(manifest, manifest_path_for(out))

    except OSError as e:
        format_error(f"Could not write results: {e}")
        raise typer.Exit(2)
    except Exception as e:
        format_error(f"Sweep failed: {e}")
        raise typer.Exit(2)
