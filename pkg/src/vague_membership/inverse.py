"""Recover the objects whose membership degrees match given targets."""

from __future__ import annotations

import dataclasses
import logging
from dataclasses import dataclass
from typing import Iterable, Mapping

from vague_membership.errors import (
    BindingError,
    ConstructionError,
    DomainError,
    PreconditionError,
)
from vague_membership.partition import VaguePartition
from vague_membership.plfunc import (
    ClosedRange,
    LevelSet,
    pl_level_set,
    pl_restricted_range,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TargetVector:
    """Target degrees per block; ``None`` leaves a block unconstrained."""

    targets: Mapping[str, float | None]
    tolerance: float = 0.0

    def __post_init__(self) -> None:
        targets = {
            str(name): None if value is None else float(value)
            for name, value in self.targets.items()
        }
        if all(v is None for v in targets.values()):
            raise ConstructionError("at least one target degree must be given")
        for name, value in targets.items():
            if value is not None and not 0.0 <= value <= 1.0:
                raise DomainError(f"target for {name!r} is {value!r}, not in [0, 1]")
        if self.tolerance < 0:
            raise DomainError(f"tolerance must be nonnegative, got {self.tolerance!r}")
        object.__setattr__(self, "targets", targets)

    @classmethod
    def from_pairs(cls, pairs: Iterable[str], tolerance: float = 0.0) -> TargetVector:
        """Parse ``name=value`` strings as given on the command line."""
        targets: dict[str, float] = {}
        for pair in pairs:
            name, sep, value = pair.partition("=")
            if not sep or not name.strip():
                raise ConstructionError(
                    f"target must look like name=value, got {pair!r}"
                )
            try:
                targets[name.strip()] = float(value)
            except ValueError:
                raise ConstructionError(
                    f"target {pair!r} has a non-numeric value"
                ) from None
        return cls(targets, tolerance)

    @property
    def specified(self) -> dict[str, float]:
        return {k: v for k, v in self.targets.items() if v is not None}


def _check_names(p: VaguePartition, targets: TargetVector) -> None:
    unknown = set(targets.targets) - set(p.names)
    if unknown:
        raise BindingError(unknown, p.names)


def _solve(p: VaguePartition, specified: Mapping[str, float], tol: float) -> LevelSet:
    result = LevelSet((ClosedRange(p.domain.lo, p.domain.hi),))
    for name, target in specified.items():
        result = result.intersect(pl_level_set(p.fn(name), target, tol))
        if result.is_empty:
            break
    return result


def invert(p: VaguePartition, targets: TargetVector) -> LevelSet:
    """All x whose specified block degrees are within tolerance of the targets.

    An empty result is a valid answer; see :func:`explain_infeasible`.

    Raises:
        BindingError: If a target names an unknown block.
    """
    _check_names(p, targets)
    result = _solve(p, targets.specified, targets.tolerance)
    if result.is_empty:
        logger.debug("targets %s are jointly infeasible", targets.specified)
    return result


def invert_approx(p: VaguePartition, targets: TargetVector, tol: float) -> LevelSet:
    """Like :func:`invert` with every level set fattened by ``tol``."""
    if not tol > 0:
        raise PreconditionError(f"approximate inversion needs tol > 0, got {tol!r}")
    return invert(p, dataclasses.replace(targets, tolerance=tol))


@dataclass(frozen=True)
class BlockDiagnostic:
    """What one block can reach on the solution set of the other targets."""

    block: str
    target: float
    attained: tuple[float, float] | None
    """(min, max) of the block over that set; None if the set is empty."""
    gap: float | None
    """Distance from the target to the attained range."""


def explain_infeasible(
    p: VaguePartition, targets: TargetVector
) -> list[BlockDiagnostic]:
    """Per-block nearest-feasibility report for a target vector."""
    _check_names(p, targets)
    specified = targets.specified
    diagnostics = []
    for name, target in specified.items():
        others = {k: v for k, v in specified.items() if k != name}
        region = _solve(p, others, targets.tolerance)
        if region.is_empty:
            diagnostics.append(BlockDiagnostic(name, target, None, None))
            continue
        fn = p.fn(name)
        ranges = [pl_restricted_range(fn, piece.lo, piece.hi) for piece in region]
        low = min(r[0] for r in ranges)
        high = max(r[1] for r in ranges)
        gap = min(max(lo - target, target - hi, 0.0) for lo, hi in ranges)
        diagnostics.append(BlockDiagnostic(name, target, (low, high), gap))
    return diagnostics
