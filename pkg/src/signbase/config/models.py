# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""Pydantic models for configuration validation."""

from enum import Enum
from typing import Literal

from pydantic import BaseModel, Field, field_validator, model_validator

from signbase.config.defaults import (
    DEFAULT_ARC_DENSITY,
    DEFAULT_ATTEMPT_FACTOR,
    DEFAULT_FLIP_PROBABILITY,
    DEFAULT_MAX_CYCLES,
    DEFAULT_ORACLE_BUDGET,
    DEFAULT_SEED,
    DEFAULT_THREADS,
    GAP_MIN_ORDER,
    TINY_MAX_ORDER,
)


class SuiteName(str, Enum):
    """Verification suites."""

    EXPONENTS = "exponents"
    BASES = "bases"
    TINY = "tiny"
    GAPS = "gaps"
    CHARACTERIZATIONS = "characterizations"


class EngineConfig(BaseModel):
    """Engine-level configuration."""

    max_cycles: int = Field(default=DEFAULT_MAX_CYCLES, ge=1)
    oracle_budget: int = Field(default=DEFAULT_ORACLE_BUDGET, ge=1)
    threads: int = Field(default=DEFAULT_THREADS, ge=1, le=64)
    default_seed: int = Field(default=DEFAULT_SEED, ge=0)
    sample_arc_density: float = Field(default=DEFAULT_ARC_DENSITY, gt=0)
    sample_flip_probability: float = Field(default=DEFAULT_FLIP_PROBABILITY, ge=0, le=1)
    sample_attempt_factor: int = Field(default=DEFAULT_ATTEMPT_FACTOR, ge=1)
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(default="INFO")


class VerifyProfile(BaseModel):
    """A named bundle of verification suites and their ranges."""

    name: str = Field(..., min_length=1, max_length=100)
    description: str = ""
    suites: list[SuiteName] = Field(default_factory=lambda: list(SuiteName))

    # Formula suites
    n_min: int = Field(default=6, ge=3)
    n_max: int = Field(default=8, ge=3)

    # Random lemma battery
    battery_orders: list[int] = Field(default_factory=list)

    # Gap scan and characterizations
    gap_orders: list[int] = Field(default_factory=lambda: [GAP_MIN_ORDER])
    samples: int = Field(default=100, ge=0)
    seed: int = Field(default=DEFAULT_SEED, ge=0)

    # Exhaustive cross-checks
    tiny_n_max: int = Field(default=TINY_MAX_ORDER, ge=1, le=TINY_MAX_ORDER)
    tiny_t_max: int = Field(default=10, ge=1, le=16)
    tiny_samples: dict[int, int] = Field(default_factory=dict)

    @field_validator("gap_orders")
    @classmethod
    def validate_gap_orders(cls, v: list[int]) -> list[int]:
        """Gap orders must satisfy the theorem's hypothesis n >= 14."""
        low = [n for n in v if n < GAP_MIN_ORDER]
        if low:
            raise ValueError(f"gap orders must be at least {GAP_MIN_ORDER}, got {low}")
        return sorted(set(v))

    @field_validator("battery_orders")
    @classmethod
    def validate_battery_orders(cls, v: list[int]) -> list[int]:
        if any(n < 2 for n in v):
            raise ValueError("battery orders must be at least 2")
        return sorted(set(v))

    @field_validator("tiny_samples")
    @classmethod
    def validate_tiny_samples(cls, v: dict[int, int]) -> dict[int, int]:
        """Sampled spot-checks cover orders 4..6 only."""
        for order, count in v.items():
            if not 4 <= order <= 6:
                raise ValueError(f"tiny_samples orders must lie in 4..6, got {order}")
            if count < 0:
                raise ValueError("tiny_samples counts must be nonnegative")
        return dict(sorted(v.items()))

    @model_validator(mode="after")
    def validate_range(self) -> "VerifyProfile":
        if self.n_min > self.n_max:
            raise ValueError(f"n_min ({self.n_min}) exceeds n_max ({self.n_max})")
        return self
