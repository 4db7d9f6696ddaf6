"""Sweep result storage: CSV data files and JSON run manifests."""

import csv
import io
import sys
from datetime import datetime
from pathlib import Path

from prodfec import __version__
from prodfec.core.models import PointResult, RunManifest, SweepConfig, SweepResult
from prodfec.core.product import code_parameters

CSV_HEADER = (
    "ebn0_db",
    "blocks",
    "info_bits",
    "bit_errors",
    "block_errors",
    "output_ber",
    "output_bler",
    "channel_ber",
    "mean_iterations",
    "wall_time_s",
)


def _csv_row(p: PointResult) -> list[str]:
    return [
        repr(p.ebn0_db),
        str(p.blocks),
        str(p.info_bits),
        str(p.bit_errors),
        str(p.block_errors),
        repr(p.output_ber),
        repr(p.output_bler),
        repr(p.channel_ber_measured),
        repr(p.mean_iterations),
        f"{p.wall_time_s:.3f}",
    ]


def render_csv(result: SweepResult) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for p in result.points:
        writer.writerow(_csv_row(p))
    return buffer.getvalue()


def build_manifest(config: SweepConfig, result: SweepResult) -> RunManifest:
    return RunManifest(
        version=__version__,
        created_at=datetime.now(),
        code=code_parameters(),
        config=config,
        results=result.points,
    )


def manifest_path_for(csv_path: Path) -> Path:
    """``results.csv`` -> ``results.manifest.json``."""
    return csv_path.with_suffix(".manifest.json")


def write_csv(result: SweepResult, path: Path | None) -> None:
    """
    Write sweep data as CSV.

    Args:
        result: Sweep to write
        path: Destination file, or None for stdout
    """
    text = render_csv(result)
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text)


def write_manifest(manifest: RunManifest, path: Path | None) -> None:
    text = manifest.model_dump_json(indent=2)
    if path is None:
        sys.stdout.write(text + "\n")
    else:
        path.write_text(text + "\n")


def read_sweep(path: Path) -> SweepResult:
    """
    Read sweep points back from a CSV file or a JSON run manifest.

    CSV rows carry only the fixed columns; fields not in the header are left at
    their defaults.
    """
    text = path.read_text()
    if path.suffix == ".json":
        return SweepResult(points=RunManifest.model_validate_json(text).results)

    reader = csv.DictReader(io.StringIO(text))
    missing = set(CSV_HEADER) - set(reader.fieldnames or ())
    if missing:
        raise ValueError(f"{path} is missing columns: {', '.join(sorted(missing))}")
    points = []
    for row in reader:
        blocks = int(row["blocks"])
        points.append(
            PointResult(
                ebn0_db=float(row["ebn0_db"]),
                blocks=blocks,
                info_bits=int(row["info_bits"]),
                bit_errors=int(row["bit_errors"]),
                block_errors=int(row["block_errors"]),
                output_ber=float(row["output_ber"]),
                output_bler=float(row["output_bler"]),
                channel_ber_measured=float(row["channel_ber"]),
                mean_iterations=float(row["mean_iterations"]),
                wall_time_s=float(row["wall_time_s"]),
            )
        )
    return SweepResult(points=points)
