"""Tests for sweep CSV and manifest storage."""

import json
from pathlib import Path

import pytest

from prodfec.core.models import PointResult, SweepConfig, SweepResult
from prodfec.utils.storage import (
    CSV_HEADER,
    build_manifest,
    manifest_path_for,
    read_sweep,
    render_csv,
    write_csv,
    write_manifest,
)

POINT = PointResult(
    ebn0_db=4.6,
    blocks=120,
    info_bits=120 * 53361,
    bit_errors=4211,
    block_errors=100,
    channel_bits=120 * 65025,
    channel_errors=1_000_000,
    output_ber=4211 / (120 * 53361),
    output_bler=100 / 120,
    channel_ber_measured=1_000_000 / (120 * 65025),
    mean_iterations=9.25,
    wall_time_s=61.5,
)


@pytest.fixture
def sweep() -> SweepResult:
    return SweepResult(points=[POINT, POINT.model_copy(update={"ebn0_db": 4.7})])


class TestCsv:
    def test_header_is_fixed(self, sweep: SweepResult) -> None:
        first_line = render_csv(sweep).splitlines()[0]
        assert first_line == (
            "ebn0_db,blocks,info_bits,bit_errors,block_errors,output_ber,output_bler,"
            "channel_ber,mean_iterations,wall_time_s"
        )
        assert first_line.split(",") == list(CSV_HEADER)

    def test_counters_are_exact(self, sweep: SweepResult) -> None:
        row = render_csv(sweep).splitlines()[1].split(",")
        assert row[1:5] == ["120", str(120 * 53361), "4211", "100"]
        assert float(row[5]) == int(row[3]) / int(row[2])

    def test_round_trip_through_file(self, sweep: SweepResult, tmp_path: Path) -> None:
        path = tmp_path / "sweep.csv"
        write_csv(sweep, path)
        back = read_sweep(path)
        assert [p.ebn0_db for p in back.points] == [4.6, 4.7]
        assert back.points[0].bit_errors == 4211
        assert back.points[0].output_ber == POINT.output_ber
        assert back.points[0].channel_ber_measured == POINT.channel_ber_measured

    def test_stdout(self, sweep: SweepResult, capsys: pytest.CaptureFixture[str]) -> None:
        write_csv(sweep, None)
        assert capsys.readouterr().out == render_csv(sweep)

    def test_missing_columns(self, tmp_path: Path) -> None:
        path = tmp_path / "bad.csv"
        path.write_text("ebn0_db,blocks\n4.5,10\n")
        with pytest.raises(ValueError, match="missing columns"):
            read_sweep(path)


class TestManifest:
    def test_contents(self, sweep: SweepResult) -> None:
        manifest = build_manifest(SweepConfig(ebn0_points=[4.6, 4.7]), sweep)
        data = json.loads(manifest.model_dump_json())
        assert data["tool"] == "prodfec"
        assert data["code"]["block_bits"] == 65025
        assert data["config"]["decoder"]["algorithm"] == "ibdd-sr"
        assert data["config"]["channel"]["w"] == 0.587
        assert len(data["results"]) == 2

    def test_path_next_to_csv(self) -> None:
        assert manifest_path_for(Path("out/run.csv")) == Path("out/run.manifest.json")

    def test_read_back(self, sweep: SweepResult, tmp_path: Path) -> None:
        path = tmp_path / "run.manifest.json"
        write_manifest(build_manifest(SweepConfig(ebn0_points=[4.6, 4.7]), sweep), path)
        back = read_sweep(path)
        assert back.points == sweep.points
