"""Net coding gain command."""

from typing import List

import typer

from prodfec.sim.ncg import NCG_TARGET_BER, ncg
from prodfec.utils.formatters import console, format_error, format_json, ncg_table
from prodfec.utils.validators import validate_target_ber


def ncg_command(
    thresholds: List[float] = typer.Option(
        ...,
        "--threshold",
        "-t",
        help="Eb/N0 (dB) at which the target BER is reached; repeat for a range",
    ),
    target_ber: float = typer.Option(NCG_TARGET_BER, "--target-ber", help="Target output BER"),
    as_json: bool = typer.Option(False, "--json", help="Print JSON instead of a table"),
) -> None:
    """
    Compute net coding gain against uncoded BPSK.

    Passing several thresholds (e.g. for 5 and 10 iterations) reports the NCG range.
    """
    if not validate_target_ber(target_ber):
        format_error(f"Target BER {target_ber} is outside (0, 0.5).")
        raise typer.Exit(1)

    try:
        estimates = [ncg(t, target_ber) for t in thresholds]
    except ValueError:
        format_error(f"Thresholds must be finite Eb/N0 values in dB, got {thresholds}.")
        raise typer.Exit(1)

    if as_json:
        format_json([e.model_dump(mode="json") for e in estimates])
        return

    console.print(ncg_table(estimates))
    if len(estimates) > 1:
        gains = [e.ncg_db for e in estimates]
        console.print(f"NCG range: [green]{min(gains):.2f} dB to {max(gains):.2f} dB[/green]")
