"""Configuration for evaluation, tolerances and logging."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

# Verdicts on "= 1", "= 0" and "> 0" use this absolute slack; document
# literals such as 1.35 are not exactly representable.
BOUNDARY_TOL = 1e-9

# All four basic dual pairs are algebraically exact.
DUALITY_TOL = 1e-12

DEFAULT_TRIPLE = "standard,min,max"

# Relative grid resolution used when an operation has no exact PL path.
DEFAULT_GRID_FRACTION = 1e-4


def _optional_float(value: str | None) -> float | None:
    if value is None or value.strip() == "":
        return None
    return float(value)


@dataclass
class EvaluationConfig:
    """Configuration for connective triples and grid fall-backs."""

    triple: str = DEFAULT_TRIPLE
    grid_step: float | None = None  # None -> (hi - lo) * DEFAULT_GRID_FRACTION
    duality_grid_step: float = 0.01

    @classmethod
    def from_env(cls) -> EvaluationConfig:
        """Create config from environment variables."""
        return cls(
            triple=os.environ.get("VAGUE_TRIPLE", DEFAULT_TRIPLE),
            grid_step=_optional_float(os.environ.get("VAGUE_GRID_STEP")),
            duality_grid_step=float(
                os.environ.get("VAGUE_DUALITY_GRID_STEP", "0.01")
            ),
        )


@dataclass
class ToleranceConfig:
    """Absolute tolerances for boundary verdicts and duality checks."""

    boundary: float = BOUNDARY_TOL
    duality: float = DUALITY_TOL

    @classmethod
    def from_env(cls) -> ToleranceConfig:
        """Create config from environment variables."""
        return cls(
            boundary=float(os.environ.get("VAGUE_BOUNDARY_TOL", str(BOUNDARY_TOL))),
            duality=float(os.environ.get("VAGUE_DUALITY_TOL", str(DUALITY_TOL))),
        )


@dataclass
class LoggingConfig:
    """Configuration for the command-line log handler."""

    level: str = "WARNING"

    @classmethod
    def from_env(cls) -> LoggingConfig:
        """Create config from environment variables."""
        return cls(level=os.environ.get("VAGUE_LOG_LEVEL", "WARNING").upper())


@dataclass
class Config:
    """Combined configuration."""

    evaluation: EvaluationConfig = field(default_factory=EvaluationConfig)
    tolerance: ToleranceConfig = field(default_factory=ToleranceConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    @classmethod
    def from_env(cls) -> Config:
        """Create combined config from environment variables."""
        return cls(
            evaluation=EvaluationConfig.from_env(),
            tolerance=ToleranceConfig.from_env(),
            logging=LoggingConfig.from_env(),
        )
