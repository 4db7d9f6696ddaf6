"""Main CLI application entry point."""

import typer

from prodfec import __version__
from prodfec.commands.bench import bench_command
from prodfec.commands.extrapolate import extrapolate_command
from prodfec.commands.ncg import ncg_command
from prodfec.commands.selftest import selftest_command
from prodfec.commands.sweep import sweep_command
from prodfec.utils.formatters import configure_logging, console

app = typer.Typer(
    name="prodfec",
    help="Simulate iBDD and iBDD-SR decoding of the BCH(255,231,3)^2 product code",
    no_args_is_help=True,
)


def _version_callback(value: bool) -> None:
    if value:
        console.print(f"prodfec {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging on stderr"),
    version: bool = typer.Option(
        False, "--version", callback=_version_callback, is_eager=True, help="Show version"
    ),
) -> None:
    configure_logging(verbose)


app.command(name="sweep")(sweep_command)
app.command(name="ncg")(ncg_command)
app.command(name="extrapolate")(extrapolate_command)
app.command(name="bench")(bench_command)
app.command(name="selftest")(selftest_command)
