"""Validation utilities for CLI inputs."""

import numpy as np

from prodfec.core.errors import SweepConfigError

MAX_POINTS = 1000


def _require_finite(values: list[float], raw: str) -> None:
    if not np.isfinite(values).all():
        raise SweepConfigError(f"Eb/N0 values must be finite, got '{raw}'")


def parse_ebn0(raw: str) -> list[float]:
    """
    Parse an Eb/N0 grid.

    Accepts ``start:step:stop`` (stop included when it falls on the grid), a
    comma-separated list, or a single value.

    Args:
        raw: Eb/N0 grid in dB

    Returns:
        List of Eb/N0 values in dB

    Raises:
        SweepConfigError: If the grid cannot be parsed
    """
    text = raw.strip()
    if not text:
        raise SweepConfigError("empty Eb/N0 grid")
    try:
        if ":" in text:
            parts = [float(p) for p in text.split(":")]
            _require_finite(parts, raw)
            if len(parts) != 3:
                raise SweepConfigError(f"expected start:step:stop, got '{raw}'")
            start, step, stop = parts
            if step <= 0 or stop < start:
                raise SweepConfigError(f"'{raw}' is not an increasing range")
            count = int(np.floor((stop - start) / step + 1e-9)) + 1
            if count > MAX_POINTS:
                raise SweepConfigError(f"'{raw}' has {count} points (limit {MAX_POINTS})")
            return [round(start + i * step, 6) for i in range(count)]
        values = [float(p) for p in text.split(",") if p.strip()]
        _require_finite(values, raw)
        if not values:
            raise SweepConfigError(f"no Eb/N0 values in '{raw}'")
        return values
    except SweepConfigError:
        raise
    except ValueError as e:
        raise SweepConfigError(f"cannot parse Eb/N0 grid '{raw}': {e}") from e


def validate_target_ber(target_ber: float) -> bool:
    """True if ``target_ber`` is a usable NCG target, i.e. in (0, 0.5)."""
    return 0.0 < target_ber < 0.5
