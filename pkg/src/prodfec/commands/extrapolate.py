"""Waterfall extrapolation command."""

from pathlib import Path

import typer

from prodfec.core.errors import FitError
from prodfec.core.models import PRODUCT_RATE
from prodfec.sim.ncg import NCG_TARGET_BER, extrapolate_threshold, ncg_from_fit
from prodfec.utils.formatters import console, fit_table, format_error, format_json, ncg_table
from prodfec.utils.storage import read_sweep
from prodfec.utils.validators import validate_target_ber


def extrapolate_command(
    results: Path = typer.Argument(..., help="Sweep CSV or JSON manifest", exists=True),
    target_ber: float = typer.Option(NCG_TARGET_BER, "--target-ber", help="Target output BER"),
    rate: float = typer.Option(PRODUCT_RATE, "--rate", help="Code rate used for Eb/N0"),
    as_json: bool = typer.Option(False, "--json", help="Print JSON instead of tables"),
) -> None:
    """
    Extrapolate a sweep to the target BER and estimate the net coding gain.

    The estimate is approximate: it rests on a two-parameter Gaussian-tail fit of
    the simulated points.
    """
    if not validate_target_ber(target_ber):
        format_error(f"Target BER {target_ber} is outside (0, 0.5).")
        raise typer.Exit(1)
    if not 0.0 < rate <= 1.0:
        format_error(f"Rate {rate} is outside (0, 1].")
        raise typer.Exit(1)

    try:
        sweep = read_sweep(results)
    except (OSError, ValueError) as e:
        format_error(f"Could not read {results}: {e}")
        raise typer.Exit(1)

    try:
        fit = extrapolate_threshold(sweep, target_ber, rate)
    except FitError as e:
        format_error(f"Extrapolation refused: {e}")
        raise typer.Exit(2)

    estimate = ncg_from_fit(fit)
    if as_json:
        format_json({"fit": fit.model_dump(mode="json"), "ncg": estimate.model_dump(mode="json")})
        return

    console.print(fit_table(fit))
    console.print(ncg_table([estimate]))
