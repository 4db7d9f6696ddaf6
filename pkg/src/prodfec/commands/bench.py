"""Decoder throughput benchmark command."""

import typer
from pydantic import ValidationError

from prodfec.core.models import DEFAULT_W, Algorithm, DecoderConfig, FailureMode
from prodfec.sim.engine import bench_throughput
from prodfec.utils.formatters import bench_table, console, format_error, format_json


def bench_command(
    ebn0: float = typer.Option(5.2, "--ebn0", help="Eb/N0 in dB of the benchmark blocks"),
    iterations: int = typer.Option(10, "--iterations", "-n", help="Total decoder iterations"),
    algorithm: Algorithm = typer.Option(Algorithm.IBDD_SR, "--algorithm", "-a"),
    failure_mode: FailureMode = typer.Option(FailureMode.HARDWARE_KEEP, "--failure-mode"),
    no_early_exit: bool = typer.Option(False, "--no-early-exit", help="Always run every iteration"),
    seconds: float = typer.Option(10.0, "--seconds", "-s", help="Wall-clock budget"),
    noiseless: bool = typer.Option(False, "--noiseless", help="Benchmark error-free blocks"),
    w: float = typer.Option(DEFAULT_W, "--w", help="Reliability threshold"),
    seed: int = typer.Option(0, "--seed"),
    as_json: bool = typer.Option(False, "--json", help="Print JSON instead of a table"),
) -> None:
    """Measure sustained software decoding throughput."""
    if not 0 < seconds < float("inf"):
        format_error("--seconds must be a positive, finite number.")
        raise typer.Exit(1)
    try:
        decoder = DecoderConfig(
            total_iterations=iterations,
            algorithm=algorithm,
            sr_failure_mode=failure_mode,
            early_termination=not no_early_exit,
        )
    except ValidationError as e:
        format_error(f"Invalid decoder configuration: {e}")
        raise typer.Exit(1)

    try:
        result = bench_throughput(
            decoder, ebn0, seconds, seed=seed, w=w, noiseless=noiseless
        )
    except ValidationError as e:
        format_error(f"Invalid channel configuration: {e}")
        raise typer.Exit(1)
    except Exception as e:
        format_error(f"Benchmark failed: {e}")
        raise typer.Exit(2)

    if as_json:
        format_json(result.model_dump(mode="json"))
    else:
        console.print(bench_table(result))
