"""Vague partitions of a real interval.

A candidate is a domain with named piecewise-linear blocks. It becomes a
:class:`VaguePartition` only after it passes five conditions:

1. every object belongs to some block to a positive degree;
2. every block is continuous (guaranteed by the representation);
3. every block reaches 1;
4. every block rises to a single unit plateau and then falls;
5. the plain sum of all blocks lies in (0, 1] everywhere.

The partition is regular when that sum is identically 1.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from vague_membership.config import BOUNDARY_TOL
from vague_membership.errors import (
    ConstructionError,
    GenerationError,
    PartitionValidationError,
)
from vague_membership.plfunc import (
    CombineOp,
    Interval,
    PiecewiseLinearFn,
    merged_breakpoints,
    pl_affine_clamp,
    pl_combine_all,
    pl_constant,
    pl_eval,
    pl_is_unimodal_with_plateau,
)

logger = logging.getLogger(__name__)

CONDITIONS = (1, 2, 3, 4, 5)


@dataclass(frozen=True)
class Block:
    """An elementary vague attribute value: a name and its membership function."""

    name: str
    fn: PiecewiseLinearFn


@dataclass(frozen=True)
class PartitionCandidate:
    """An unvalidated domain with named blocks in a fixed order."""

    domain: Interval
    blocks: tuple[Block, ...]
    concept: str = ""
    attribute: str = ""

    def __post_init__(self) -> None:
        blocks = tuple(
            b if isinstance(b, Block) else Block(b[0], b[1]) for b in self.blocks
        )
        if not blocks:
            raise ConstructionError("a partition needs at least one block")
        seen: set[str] = set()
        for block in blocks:
            if not block.name:
                raise ConstructionError("block names must be nonempty")
            if block.name in seen:
                raise ConstructionError(f"duplicate block name {block.name!r}")
            seen.add(block.name)
            if block.fn.domain != self.domain:
                raise ConstructionError(
                    f"block {block.name!r} is defined on [{block.fn.domain.lo}, "
                    f"{block.fn.domain.hi}], not on the partition domain "
                    f"[{self.domain.lo}, {self.domain.hi}]"
                )
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_breakpoints(
        cls,
        domain: Interval | Sequence[float],
        blocks: Mapping[str, Sequence[Sequence[float]]],
        concept: str = "",
        attribute: str = "",
    ) -> PartitionCandidate:
        """Build a candidate from ``{name: [[x, y], ...]}``."""
        if not isinstance(domain, Interval):
            domain = Interval(domain[0], domain[1])
        return cls(
            domain,
            tuple(
                Block(name, PiecewiseLinearFn.from_points(points, domain))
                for name, points in blocks.items()
            ),
            concept,
            attribute,
        )

    @property
    def names(self) -> list[str]:
        return [b.name for b in self.blocks]

    @property
    def functions(self) -> list[PiecewiseLinearFn]:
        return [b.fn for b in self.blocks]

    def __len__(self) -> int:
        return len(self.blocks)

    def fn(self, name: str) -> PiecewiseLinearFn:
        for block in self.blocks:
            if block.name == name:
                return block.fn
        raise KeyError(name)

    def values_at(self, x: float) -> list[float]:
        return [pl_eval(b.fn, x) for b in self.blocks]


@dataclass(frozen=True)
class ConditionVerdict:
    """Verdict on one condition; failures carry a witness x and/or block."""

    condition: int
    holds: bool
    reason: str = ""
    witness_x: float | None = None
    block: str | None = None

    def to_dict(self) -> dict:
        return {
            "condition": self.condition,
            "holds": self.holds,
            "reason": self.reason,
            "witness_x": self.witness_x,
            "block": self.block,
        }


@dataclass(frozen=True)
class ValidationReport:
    """Per-condition verdicts plus the regularity verdict."""

    conditions: tuple[ConditionVerdict, ...]
    regular: bool
    sum_min: float
    sum_max: float

    @property
    def valid(self) -> bool:
        return all(c.holds for c in self.conditions)

    def verdict(self, condition: int) -> ConditionVerdict:
        return self.conditions[condition - 1]

    def failed_conditions(self) -> list[int]:
        return [c.condition for c in self.conditions if not c.holds]

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "regular": self.regular,
            "sum_range": [self.sum_min, self.sum_max],
            "conditions": [c.to_dict() for c in self.conditions],
        }


def _check_positive_cover(
    candidate: PartitionCandidate, tol: float
) -> ConditionVerdict:
    upper = pl_combine_all(candidate.functions, CombineOp.MAX)
    low = upper.extrema()
    if low.min_value > tol:
        return ConditionVerdict(1, True)
    return ConditionVerdict(
        1,
        False,
        f"no block covers x = {low.min_at:g} (largest degree {low.min_value:g})",
        witness_x=low.min_at,
    )


def _check_normal_blocks(candidate: PartitionCandidate, tol: float) -> ConditionVerdict:
    for block in candidate.blocks:
        peak = block.fn.extrema()
        if peak.max_value < 1.0 - tol:
            return ConditionVerdict(
                3,
                False,
                f"block {block.name!r} peaks at {peak.max_value:g}, never reaching 1",
                witness_x=peak.max_at,
                block=block.name,
            )
    return ConditionVerdict(3, True)


def _check_unimodal_blocks(
    candidate: PartitionCandidate, tol: float
) -> ConditionVerdict:
    for block in candidate.blocks:
        shape = pl_is_unimodal_with_plateau(block.fn, tol)
        if not shape.holds:
            witness = shape.segment[0] if shape.segment else block.fn.extrema().max_at
            return ConditionVerdict(
                4,
                False,
                f"block {block.name!r} {shape.reason}",
                witness_x=witness,
                block=block.name,
            )
    return ConditionVerdict(4, True)


def first_within(values: Sequence[float], target: float, slack: float = 1e-12) -> int:
    """Index of the first value within ``slack`` of ``target``."""
    return next(i for i, v in enumerate(values) if abs(v - target) <= slack)


def _block_sums(candidate: PartitionCandidate) -> tuple[tuple[float, ...], list[float]]:
    xs = merged_breakpoints(candidate.functions)
    return xs, [math.fsum(candidate.values_at(x)) for x in xs]


def validate_partition(
    candidate: PartitionCandidate, tol: float = BOUNDARY_TOL
) -> ValidationReport:
    """Check every condition exactly at the merged breakpoints.

    Conditions (1) and (5) involve pointwise max and plain sum of piecewise
    linear functions, which are piecewise linear again, so checking their
    breakpoints is exhaustive.
    """
    xs, sums = _block_sums(candidate)
    lo_i = first_within(sums, min(sums))
    hi_i = first_within(sums, max(sums))
    if sums[hi_i] > 1.0 + tol:
        sum_verdict = ConditionVerdict(
            5,
            False,
            f"blocks sum to {sums[hi_i]:.12g} > 1 at x = {xs[hi_i]:g}",
            witness_x=xs[hi_i],
        )
    elif sums[lo_i] <= tol:
        sum_verdict = ConditionVerdict(
            5,
            False,
            f"blocks sum to {sums[lo_i]:.12g} at x = {xs[lo_i]:g}",
            witness_x=xs[lo_i],
        )
    else:
        sum_verdict = ConditionVerdict(5, True)

    report = ValidationReport(
        conditions=(
            _check_positive_cover(candidate, tol),
            ConditionVerdict(2, True, "continuous by piecewise-linear representation"),
            _check_normal_blocks(candidate, tol),
            _check_unimodal_blocks(candidate, tol),
            sum_verdict,
        ),
        regular=all(abs(s - 1.0) <= tol for s in sums),
        sum_min=sums[lo_i],
        sum_max=sums[hi_i],
    )
    for verdict in report.conditions:
        if not verdict.holds:
            logger.debug("condition (%d) fails: %s", verdict.condition, verdict.reason)
    return report


@dataclass(frozen=True)
class VaguePartition(PartitionCandidate):
    """A candidate that passed validation at tolerance ``tol``; raises otherwise."""

    tol: float = field(default=BOUNDARY_TOL, repr=False, compare=False)
    report: ValidationReport = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        super().__post_init__()
        report = validate_partition(self, self.tol)
        if not report.valid:
            raise PartitionValidationError(report)
        object.__setattr__(self, "report", report)

    @classmethod
    def from_candidate(
        cls, candidate: PartitionCandidate, tol: float = BOUNDARY_TOL
    ) -> VaguePartition:
        return cls(
            candidate.domain,
            candidate.blocks,
            candidate.concept,
            candidate.attribute,
            tol,
        )

    @property
    def regular(self) -> bool:
        return self.report.regular


def is_regular(p: VaguePartition) -> bool:
    """Whether the blocks sum to exactly 1 everywhere (within tolerance)."""
    return p.report.regular


def check_prop_5_1(
    p: PartitionCandidate, x: float, tol: float = BOUNDARY_TOL
) -> bool:
    """Each block plus the largest other block lies in (0, 1] at ``x``."""
    p.domain.require(x)
    values = p.values_at(x)
    for i, value in enumerate(values):
        rest = max(values[:i] + values[i + 1 :], default=0.0)
        if not 0.0 < value + rest <= 1.0 + tol:
            return False
    return True


def check_prop_5_2(
    p: PartitionCandidate, x: float, tol: float = BOUNDARY_TOL
) -> bool:
    """A block at degree 1 forces every other block to 0 at ``x``."""
    p.domain.require(x)
    values = p.values_at(x)
    for i, value in enumerate(values):
        if value >= 1.0 - tol:
            if any(v > tol for j, v in enumerate(values) if j != i):
                return False
    return True


def scale_block(
    candidate: PartitionCandidate, name: str, factor: float
) -> PartitionCandidate:
    """Rescale one block about its unit plateau: y -> clamp(1 - (1 - y) / factor).

    The plateau, continuity and flank monotonicity survive; ``factor > 1``
    raises every sub-unit degree and ``factor < 1`` lowers it.
    """
    if factor <= 0:
        raise ConstructionError(f"scale factor must be positive, got {factor!r}")
    if name not in candidate.names:
        raise ConstructionError(f"no block named {name!r}")
    blocks = tuple(
        Block(b.name, pl_affine_clamp(b.fn, 1.0 / factor, 1.0, pivot=1.0))
        if b.name == name
        else b
        for b in candidate.blocks
    )
    return PartitionCandidate(
        candidate.domain, blocks, candidate.concept, candidate.attribute
    )


def _chain_blocks(domain: Interval, cuts: Sequence[float]) -> list[Block]:
    """Trapezoid chain; block i falls over [cuts[2i], cuts[2i+1]]."""
    n = len(cuts) // 2 + 1
    lo, hi = domain.lo, domain.hi
    blocks = []
    for i in range(n):
        points: list[tuple[float, float]] = []
        if i == 0:
            points.append((lo, 1.0))
        else:
            points += [(lo, 0.0), (cuts[2 * i - 2], 0.0), (cuts[2 * i - 1], 1.0)]
        if i == n - 1:
            points.append((hi, 1.0))
        else:
            points += [(cuts[2 * i], 1.0), (cuts[2 * i + 1], 0.0), (hi, 0.0)]
        blocks.append(Block(f"b{i}", PiecewiseLinearFn(domain, tuple(points))))
    return blocks


def random_partition(
    seed: int, domain: Interval, n: int, regular: bool = True
) -> VaguePartition:
    """Deterministic random partition built as a chain of trapezoids.

    Neighbouring blocks overlap on transition intervals where one falls
    linearly from 1 to 0 while the next rises, so the chain is regular. With
    ``regular=False`` one randomly chosen block is lowered by
    :func:`scale_block`, which keeps the partition valid; a single block
    cannot be made irregular.
    """
    if n < 1:
        raise GenerationError(f"block count must be at least 1, got {n}")
    rng = np.random.default_rng(seed)
    if n == 1:
        blocks = [Block("b0", pl_constant(domain, 1.0))]
    else:
        gaps = rng.uniform(0.2, 1.0, size=2 * n - 1)
        fractions = np.cumsum(gaps)[:-1] / gaps.sum()
        cuts = [float(c) for c in domain.lo + domain.width * fractions]
        resolution = 16 * float(np.spacing(max(abs(domain.lo), abs(domain.hi))))
        edges = [domain.lo, *cuts, domain.hi]
        if min(b - a for a, b in zip(edges, edges[1:])) <= resolution:
            raise GenerationError(
                f"{n} blocks do not fit on [{domain.lo}, {domain.hi}] "
                f"at floating-point resolution"
            )
        blocks = _chain_blocks(domain, cuts)

    candidate = PartitionCandidate(
        domain, tuple(blocks), concept="random", attribute=f"seed {seed}"
    )
    if not regular and n > 1:
        target = blocks[int(rng.integers(n))].name
        candidate = scale_block(candidate, target, float(rng.uniform(0.6, 0.95)))
    return VaguePartition.from_candidate(candidate)
