"""Factory functions for creating configured defaults."""

from __future__ import annotations

import logging

from vague_membership.config import (
    Config,
    EvaluationConfig,
    LoggingConfig,
    ToleranceConfig,
)
from vague_membership.connectives import (
    ConnectiveTriple,
    check_duality,
    parse_triple,
    set_default_triple,
)
from vague_membership.errors import ConstructionError

logger = logging.getLogger(__name__)


def create_triple(
    config: EvaluationConfig | None = None,
    tolerance: ToleranceConfig | None = None,
) -> ConnectiveTriple:
    """Create a connective triple based on configuration.

    Args:
        config: Evaluation configuration (uses env vars if None).
        tolerance: Tolerances; the duality residual must not exceed
            ``tolerance.duality`` (uses env vars if None).

    Returns:
        Validated triple; its duality is re-certified at the configured step.
    """
    config = config or EvaluationConfig.from_env()
    tolerance = tolerance or ToleranceConfig.from_env()
    triple = parse_triple(config.triple)
    check = check_duality(triple, config.duality_grid_step, tolerance.duality)
    if not check.dual:
        raise ConstructionError(
            f"{triple.name} is not N-dual at step {config.duality_grid_step:g} "
            f"(residual {check.residual:g} at {check.witness})"
        )
    logger.debug("using triple %s", triple.name)
    return triple


_handler: logging.Handler | None = None


def configure_logging(config: LoggingConfig | None = None) -> None:
    """Install a stderr handler on the package logger at the configured level."""
    global _handler
    config = config or LoggingConfig.from_env()
    package_logger = logging.getLogger("vague_membership")
    if _handler is None:
        _handler = logging.StreamHandler()
        _handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        package_logger.addHandler(_handler)
    package_logger.setLevel(config.level)


def configure_from_env() -> Config:
    """Configure the default triple from environment variables.

    Reads VAGUE_TRIPLE, VAGUE_GRID_STEP, VAGUE_DUALITY_GRID_STEP,
    VAGUE_BOUNDARY_TOL, VAGUE_DUALITY_TOL and VAGUE_LOG_LEVEL.

    Returns:
        The configuration that was read, for callers needing grid steps
        or tolerances.
    """
    config = Config.from_env()
    set_default_triple(create_triple(config.evaluation, config.tolerance))
    return config


def reset_defaults() -> None:
    """Reset the default triple to standard negation with min and max.

    Also removes the handler installed by :func:`configure_logging`.
    Useful for testing.
    """
    global _handler
    set_default_triple(ConnectiveTriple())
    package_logger = logging.getLogger("vague_membership")
    if _handler is not None:
        package_logger.removeHandler(_handler)
        _handler = None
    package_logger.setLevel(logging.NOTSET)
