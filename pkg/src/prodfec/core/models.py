"""Pydantic models for configuration, reports and simulation results."""

from __future__ import annotations

from datetime import datetime
from enum import Enum
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, FiniteFloat, model_validator

from prodfec.core.bch import K, N

DEFAULT_W = 0.587
PRODUCT_RATE = (K * K) / (N * N)


class Algorithm(str, Enum):
    IBDD = "ibdd"
    IBDD_SR = "ibdd-sr"


class FailureMode(str, Enum):
    """What an SR pass writes to an unreliable bit when its component decoder fails."""

    HARDWARE_KEEP = "hardware"
    STRICT_RESET = "strict"


class CodeParameters(BaseModel):
    """Parameters of the BCH(255,231,3)^2 product code."""

    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    t: int
    block_bits: int
    info_bits: int
    rate: float
    overhead: float


class ChannelConfig(BaseModel):
    """BI-AWGN channel with a one-bit reliability quantizer."""

    model_config = ConfigDict(frozen=True)

    ebn0_db: float = Field(0.0, allow_inf_nan=False)
    rate: float = Field(PRODUCT_RATE, gt=0.0, le=1.0)
    w: float = Field(DEFAULT_W, gt=0.0)
    seed: int = Field(0, ge=0, lt=2**64)
    noiseless: bool = False

    @property
    def noise_variance(self) -> float:
        if self.noiseless:
            return 0.0
        return 1.0 / (2.0 * self.rate * 10.0 ** (self.ebn0_db / 10.0))

    @property
    def sigma(self) -> float:
        return float(self.noise_variance**0.5)


class DecoderConfig(BaseModel):
    """
    Iterative product decoder settings.

    One iteration is a row pass followed by a column pass. For IBDD_SR the last
    ``cleanup_ibdd_iterations`` of ``total_iterations`` are plain iBDD.
    """

    model_config = ConfigDict(frozen=True)

    total_iterations: int = Field(10, ge=1)
    algorithm: Algorithm = Algorithm.IBDD_SR
    sr_failure_mode: FailureMode = FailureMode.HARDWARE_KEEP
    cleanup_ibdd_iterations: int = Field(2, ge=0)
    early_termination: bool = True

    @model_validator(mode="after")
    def check_cleanup(self) -> DecoderConfig:
        if (
            self.algorithm is Algorithm.IBDD_SR
            and self.cleanup_ibdd_iterations > self.total_iterations
        ):
            raise ValueError(
                f"cleanup_ibdd_iterations ({self.cleanup_ibdd_iterations}) exceeds "
                f"total_iterations ({self.total_iterations})"
            )
        return self

    @property
    def sr_iterations(self) -> int:
        if self.algorithm is Algorithm.IBDD:
            return 0
        return self.total_iterations - self.cleanup_ibdd_iterations

    def schedule(self) -> list[Algorithm]:
        """Algorithm used in each iteration, in order."""
        return [Algorithm.IBDD_SR] * self.sr_iterations + [Algorithm.IBDD] * (
            self.total_iterations - self.sr_iterations
        )


class DecodeReport(BaseModel):
    """Outcome and activity counters of one block decode."""

    iterations_run: int = Field(..., ge=0)
    terminated_early: bool
    corrections_applied: int = Field(0, ge=0)
    masked_corrections: int = Field(0, ge=0)
    success: bool
    sr_iterations: int = Field(0, ge=0)
    cleanup_iterations: int = Field(0, ge=0)
    component_decodes: int = Field(0, ge=0)
    corrected_words: int = Field(0, ge=0)
    gated_decodes: int = Field(0, ge=0)
    bdd_failures: int = Field(0, ge=0)
    per_iteration_corrections: list[int] = Field(default_factory=list)


class StopRule(BaseModel):
    """When to stop simulating one Eb/N0 point."""

    model_config = ConfigDict(frozen=True)

    min_block_errors: int = Field(100, ge=1)
    min_blocks: int = Field(1, ge=1)
    max_blocks: int = Field(10_000, ge=1)

    @model_validator(mode="after")
    def check_bounds(self) -> StopRule:
        if self.max_blocks < self.min_blocks:
            raise ValueError(
                f"max_blocks ({self.max_blocks}) is below min_blocks ({self.min_blocks})"
            )
        return self


class SweepConfig(BaseModel):
    """A full Monte Carlo sweep; the result is a deterministic function of this."""

    model_config = ConfigDict(frozen=True)

    ebn0_points: list[FiniteFloat] = Field(..., min_length=1)
    decoder: DecoderConfig = Field(default_factory=DecoderConfig)
    channel: ChannelConfig = Field(default_factory=ChannelConfig)
    stop: StopRule = Field(default_factory=StopRule)
    workers: int = Field(1, ge=1)


class PointResult(BaseModel):
    """Statistics of one Eb/N0 point. Error counters are exact."""

    ebn0_db: float
    blocks: int = Field(..., ge=0)
    info_bits: int = Field(..., ge=0)
    bit_errors: int = Field(..., ge=0)
    block_errors: int = Field(..., ge=0)
    channel_bits: int = Field(0, ge=0)
    channel_errors: int = Field(0, ge=0)
    output_ber: float
    output_bler: float
    channel_ber_measured: float
    mean_iterations: float
    wall_time_s: float
    ber_ci_low: float = 0.0
    ber_ci_high: float = 0.0


class SweepResult(BaseModel):
    points: list[PointResult] = Field(default_factory=list)


class NcgEstimate(BaseModel):
    """Net coding gain at ``target_ber`` relative to uncoded BPSK."""

    target_ber: float = Field(..., gt=0.0, lt=0.5)
    threshold_ebn0_db: float = Field(..., allow_inf_nan=False)
    ncg_db: float
    method: Literal["direct", "extrapolated"] = "direct"
    approximate: bool = False


class ThresholdFit(BaseModel):
    """Gaussian-tail fit log10(BER) = log10(Q(a * sqrt(2 R Eb/N0) + b)) and its crossing."""

    a: float
    b: float
    rate: float
    target_ber: float
    threshold_ebn0_db: float = Field(..., allow_inf_nan=False)
    points_used: int
    rms_residual_decades: float
    approximate: bool = True


class BenchResult(BaseModel):
    """Sustained software decoding throughput."""

    decoder: DecoderConfig
    ebn0_db: float
    noiseless: bool = False
    blocks: int
    seconds: float
    info_bits_per_second: float
    blocks_per_second: float
    mean_corrections: float
    mean_iterations: float


class RunManifest(BaseModel):
    """Provenance record written next to sweep data."""

    tool: str = "prodfec"
    version: str
    created_at: datetime
    code: CodeParameters
    config: SweepConfig
    results: list[PointResult] = Field(default_factory=list)
