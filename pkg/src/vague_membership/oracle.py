"""Brute-force oracles for cross-checking the exact piecewise-linear paths.

Nothing here reuses the evaluation code of :mod:`vague_membership.measure`
or the breakpoint algorithms of :mod:`vague_membership.plfunc`; every result
comes from dense sampling or a separately written interpreter. The oracles
are slow and meant for tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Literal

import numpy as np

from vague_membership.config import BOUNDARY_TOL
from vague_membership.connectives import ConnectiveTriple
from vague_membership.errors import BindingError, PreconditionError
from vague_membership.expr import And, Atom, Bot, Neg, Or, Top, VagueExpr, as_expr
from vague_membership.partition import PartitionCandidate
from vague_membership.plfunc import Interval

MIN_CELLS = 100

_TNORMS: dict[str, Callable[[float, float], float]] = {
    "min": lambda x, y: x if x < y else y,
    "product": lambda x, y: x * y,
    "lukasiewicz": lambda x, y: max(0.0, x + y - 1.0),
    "drastic": lambda x, y: y if x == 1.0 else (x if y == 1.0 else 0.0),
}
_TCONORMS: dict[str, Callable[[float, float], float]] = {
    "max": lambda x, y: x if x > y else y,
    "probsum": lambda x, y: x + y - x * y,
    "boundedsum": lambda x, y: min(1.0, x + y),
    "drastic": lambda x, y: y if x == 0.0 else (x if y == 0.0 else 1.0),
}
_NEGATIONS: dict[str, Callable[[float], float]] = {
    "standard": lambda x: 1.0 - x,
    "square": lambda x: 1.0 - x**2,
    "goedel": lambda x: 1.0 if x == 0.0 else 0.0,
}


@dataclass(frozen=True)
class GridSpec:
    """A uniform grid given by its step or by its number of points."""

    step: float | None = None
    count: int | None = None

    def __post_init__(self) -> None:
        if (self.step is None) == (self.count is None):
            raise PreconditionError("give exactly one of step or count")
        if self.step is not None and not self.step > 0:
            raise PreconditionError(f"grid step must be positive, got {self.step!r}")
        if self.count is not None and self.count < MIN_CELLS + 1:
            raise PreconditionError(
                f"a grid needs at least {MIN_CELLS + 1} points, got {self.count}"
            )

    def points(self, domain: Interval) -> np.ndarray:
        if self.count is not None:
            count = self.count
        else:
            count = int(math.ceil(domain.width / self.step - 1e-9)) + 1
        if count - 1 < MIN_CELLS:
            raise PreconditionError(
                f"step {self.step} gives {count - 1} cells on "
                f"[{domain.lo}, {domain.hi}]; at least {MIN_CELLS} are needed"
            )
        return np.linspace(domain.lo, domain.hi, count)


def oracle_eval(j, triple: ConnectiveTriple, e: VagueExpr | str) -> float:
    """Evaluate ``e`` on the degrees of ``j`` with an explicit operand stack."""
    e = as_expr(e)
    degrees = dict(j.degrees)
    tnorm = _TNORMS[triple.tnorm.value]
    tconorm = _TCONORMS[triple.tconorm.value]
    negate = _NEGATIONS[triple.negation.value]

    # post-order: (node, children_done)
    stack: list[tuple[VagueExpr, bool]] = [(e, False)]
    values: list[float] = []
    unbound: set[str] = set()
    while stack:
        node, done = stack.pop()
        if isinstance(node, Bot):
            values.append(0.0)
        elif isinstance(node, Top):
            values.append(1.0)
        elif isinstance(node, Atom):
            if node.name not in degrees:
                unbound.add(node.name)
                values.append(0.0)
            else:
                values.append(degrees[node.name])
        elif not done:
            stack.append((node, True))
            if isinstance(node, Neg):
                stack.append((node.child, False))
            else:
                stack.append((node.right, False))
                stack.append((node.left, False))
        elif isinstance(node, Neg):
            values.append(negate(values.pop()))
        else:
            right = values.pop()
            left = values.pop()
            op = tnorm if isinstance(node, And) else tconorm
            values.append(op(left, right))
    if unbound:
        raise BindingError(unbound, list(degrees))
    return values[0]


@dataclass(frozen=True)
class OracleReport:
    """Grid verdicts per condition; condition (2) is never checkable (None)."""

    conditions: dict[int, bool | None]
    regular: bool
    witnesses: dict[int, float] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return all(v is not False for v in self.conditions.values())


def _sample(candidate: PartitionCandidate, xs: np.ndarray) -> np.ndarray:
    return np.array([np.interp(xs, b.fn.xs, b.fn.ys) for b in candidate.blocks])


def _max_slope(candidate: PartitionCandidate) -> float:
    slopes = [
        abs(np.diff(b.fn.ys) / np.diff(b.fn.xs)).max() for b in candidate.blocks
    ]
    return float(max(slopes))


def _flanks_monotone(row: np.ndarray, slack: float, tol: float) -> bool:
    top = np.flatnonzero(row >= 1.0 - slack)
    if top.size == 0:
        return False
    first, last = top[0], top[-1]
    rising = np.diff(row[: first + 1])
    falling = np.diff(row[last:])
    return bool(
        (rising >= -tol).all()
        and (row[first : last + 1] >= 1.0 - slack).all()
        and (falling <= tol).all()
    )


def oracle_validate(
    candidate: PartitionCandidate, grid: GridSpec, tol: float = BOUNDARY_TOL
) -> OracleReport:
    """Check the partition conditions by dense sampling."""
    xs = grid.points(candidate.domain)
    values = _sample(candidate, xs)
    # a unit peak between two grid points is missed by at most one step of rise
    slack = max(tol, float(xs[1] - xs[0]) * _max_slope(candidate))

    cover = values.max(axis=0)
    totals = values.sum(axis=0)
    witnesses: dict[int, float] = {}

    covered = bool(cover.min() > tol)
    if not covered:
        witnesses[1] = float(xs[np.argmin(cover)])
    normal = bool((values.max(axis=1) >= 1.0 - slack).all())
    unimodal = all(_flanks_monotone(row, slack, tol) for row in values)

    high, low = totals.max(), totals.min()
    bounded = bool(low > tol and high <= 1.0 + tol)
    if high > 1.0 + tol:
        witnesses[5] = float(xs[np.flatnonzero(totals >= high - 1e-12)[0]])
    elif low <= tol:
        witnesses[5] = float(xs[np.flatnonzero(totals <= low + 1e-12)[0]])

    return OracleReport(
        conditions={1: covered, 2: None, 3: normal, 4: unimodal, 5: bounded},
        regular=bool(np.abs(totals - 1.0).max() <= tol),
        witnesses=witnesses,
    )


def oracle_extremum(
    f: Callable[[float], float],
    grid: GridSpec,
    mode: Literal["min", "max"],
    domain: Interval | None = None,
) -> tuple[float, float]:
    """Grid argmin/argmax of a scalar function; ties go to the smallest x."""
    if domain is None:
        domain = f.domain
    sign = 1.0 if mode == "max" else -1.0
    best_value = -math.inf
    best_x = domain.lo
    for x in grid.points(domain):
        value = sign * f(float(x))
        if value > best_value:
            best_value, best_x = value, float(x)
    return sign * best_value, best_x
