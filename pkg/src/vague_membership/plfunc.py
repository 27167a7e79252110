"""Exact piecewise-linear functions on a closed real interval.

Membership functions are stored as sorted breakpoints. Between breakpoints a
function is the straight line through its neighbours, which keeps evaluation,
pointwise min/max, clamped sums, extrema and level sets exact up to one
rounding per operation.
"""

from __future__ import annotations

import enum
import logging
import math
from bisect import bisect_right
from dataclasses import dataclass, field
from functools import reduce
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from vague_membership.config import BOUNDARY_TOL, DEFAULT_GRID_FRACTION
from vague_membership.errors import ConstructionError, DomainError, PreconditionError
from vague_membership.protocols import BaseMembershipFn, Extrema

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Interval:
    """A closed interval [lo, hi] with lo < hi."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        lo, hi = float(self.lo), float(self.hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise ConstructionError(f"interval bounds must be finite: [{lo}, {hi}]")
        if not lo < hi:
            raise ConstructionError(f"interval needs lo < hi: [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def require(self, x: float) -> None:
        if not self.contains(x):
            raise DomainError(
                f"x = {x!r} lies outside the domain [{self.lo}, {self.hi}]"
            )

    def default_step(self) -> float:
        return self.width * DEFAULT_GRID_FRACTION


@dataclass(frozen=True)
class ClosedRange:
    """A closed range [lo, hi] with lo <= hi; a point when lo == hi."""

    lo: float
    hi: float

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def contains(self, x: float, slack: float = 0.0) -> bool:
        return self.lo - slack <= x <= self.hi + slack


def _widened(piece: ClosedRange) -> tuple[float, float]:
    return math.nextafter(piece.lo, -math.inf), math.nextafter(piece.hi, math.inf)


@dataclass(frozen=True)
class LevelSet:
    """Sorted, pairwise disjoint points and closed intervals."""

    pieces: tuple[ClosedRange, ...] = ()

    def __iter__(self) -> Iterator[ClosedRange]:
        return iter(self.pieces)

    def __len__(self) -> int:
        return len(self.pieces)

    @property
    def is_empty(self) -> bool:
        return not self.pieces

    @property
    def points(self) -> list[float]:
        return [p.lo for p in self.pieces if p.is_point]

    @property
    def intervals(self) -> list[ClosedRange]:
        return [p for p in self.pieces if not p.is_point]

    def contains(self, x: float, slack: float = 0.0) -> bool:
        return any(p.contains(x, slack) for p in self.pieces)

    def intersect(self, other: LevelSet) -> LevelSet:
        """Intersect two level sets.

        Endpoints are widened by one ulp before testing for overlap so that
        the same crossing computed along two different segments still meets.
        """
        result: list[ClosedRange] = []
        i = j = 0
        while i < len(self.pieces) and j < len(other.pieces):
            a, b = self.pieces[i], other.pieces[j]
            a_lo, a_hi = _widened(a)
            b_lo, b_hi = _widened(b)
            if max(a_lo, b_lo) <= min(a_hi, b_hi):
                lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
                if lo > hi:
                    lo = hi = (lo + hi) / 2
                result.append(ClosedRange(lo, hi))
            if a_hi < b_hi:
                i += 1
            else:
                j += 1
        return LevelSet(_merge(result))


def _merge(pieces: Iterable[ClosedRange]) -> tuple[ClosedRange, ...]:
    merged: list[ClosedRange] = []
    for piece in sorted(pieces, key=lambda p: (p.lo, p.hi)):
        if merged and piece.lo <= math.nextafter(merged[-1].hi, math.inf):
            last = merged[-1]
            merged[-1] = ClosedRange(last.lo, max(last.hi, piece.hi))
        else:
            merged.append(piece)
    return tuple(merged)


@dataclass(frozen=True)
class PiecewiseLinearFn(BaseMembershipFn):
    """A continuous piecewise-linear map from ``domain`` to [0, 1]."""

    domain: Interval
    breakpoints: tuple[tuple[float, float], ...]
    _xs: tuple[float, ...] = field(init=False, repr=False, compare=False)
    _ys: tuple[float, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        points = tuple((float(x), float(y)) for x, y in self.breakpoints)
        if len(points) < 2:
            raise ConstructionError("a piecewise-linear function needs 2+ breakpoints")
        xs = tuple(p[0] for p in points)
        ys = tuple(p[1] for p in points)
        if xs[0] != self.domain.lo or xs[-1] != self.domain.hi:
            raise ConstructionError(
                f"breakpoints must span the domain [{self.domain.lo}, "
                f"{self.domain.hi}], got [{xs[0]}, {xs[-1]}]"
            )
        for left, right in zip(xs, xs[1:]):
            if not left < right:
                raise ConstructionError(
                    f"breakpoint abscissae must strictly increase ({left} >= {right})"
                )
        for x, y in points:
            if not 0.0 <= y <= 1.0:
                raise ConstructionError(f"ordinate {y!r} at x = {x} is not in [0, 1]")
        object.__setattr__(self, "breakpoints", points)
        object.__setattr__(self, "_xs", xs)
        object.__setattr__(self, "_ys", ys)

    @classmethod
    def from_points(
        cls, points: Sequence[Sequence[float]], domain: Interval | None = None
    ) -> PiecewiseLinearFn:
        """Build from [x, y] pairs; the domain defaults to their x-span."""
        if domain is None:
            if len(points) < 2:
                raise ConstructionError(
                    "a piecewise-linear function needs 2+ breakpoints"
                )
            domain = Interval(points[0][0], points[-1][0])
        return cls(domain, tuple((x, y) for x, y in points))

    @property
    def xs(self) -> tuple[float, ...]:
        return self._xs

    @property
    def ys(self) -> tuple[float, ...]:
        return self._ys

    @property
    def exact(self) -> bool:
        return True

    def segments(self) -> Iterator[tuple[float, float, float, float]]:
        for i in range(len(self._xs) - 1):
            yield self._xs[i], self._ys[i], self._xs[i + 1], self._ys[i + 1]

    def __call__(self, x: float) -> float:
        return pl_eval(self, x)

    def evaluate_many(self, xs: np.ndarray) -> np.ndarray:
        return np.interp(np.asarray(xs, dtype=float), self._xs, self._ys)

    def extrema(self) -> Extrema:
        return pl_extrema(self)


@dataclass(frozen=True, eq=False)
class SampledFn(BaseMembershipFn):
    """A membership function known only on a uniform grid.

    Values between grid points are linearly interpolated; every quantity
    derived from it is approximate at the resolution ``step``.
    """

    domain: Interval
    grid: np.ndarray
    values: np.ndarray
    step: float

    @classmethod
    def sample(
        cls,
        domain: Interval,
        fn: Callable[[np.ndarray], np.ndarray],
        step: float | None = None,
    ) -> SampledFn:
        """Sample a vectorised function on a uniform grid over ``domain``.

        Raises:
            PreconditionError: If ``step`` is not positive.
        """
        if step is None:
            step = domain.default_step()
        elif not step > 0:
            raise PreconditionError(f"grid step must be positive, got {step!r}")
        count = max(int(math.ceil(domain.width / step)), 1) + 1
        grid = np.linspace(domain.lo, domain.hi, count)
        values = np.clip(np.asarray(fn(grid), dtype=float), 0.0, 1.0)
        return cls(domain, grid, values, domain.width / (count - 1))

    @property
    def exact(self) -> bool:
        return False

    def __call__(self, x: float) -> float:
        self.domain.require(x)
        return float(np.interp(x, self.grid, self.values))

    def evaluate_many(self, xs: np.ndarray) -> np.ndarray:
        return np.interp(np.asarray(xs, dtype=float), self.grid, self.values)

    def extrema(self) -> Extrema:
        lo, hi = int(np.argmin(self.values)), int(np.argmax(self.values))
        return Extrema(
            min_value=float(self.values[lo]),
            min_at=float(self.grid[lo]),
            max_value=float(self.values[hi]),
            max_at=float(self.grid[hi]),
        )


def pl_eval(f: PiecewiseLinearFn, x: float) -> float:
    """Evaluate ``f`` at ``x`` by linear interpolation between breakpoints."""
    f.domain.require(x)
    xs, ys = f.xs, f.ys
    i = bisect_right(xs, x) - 1
    if xs[i] == x:
        return ys[i]
    x0, x1, y0, y1 = xs[i], xs[i + 1], ys[i], ys[i + 1]
    y = y0 + (y1 - y0) * ((x - x0) / (x1 - x0))
    return min(max(y, min(y0, y1)), max(y0, y1))


def pl_constant(domain: Interval, value: float) -> PiecewiseLinearFn:
    """The constant function ``value`` on ``domain``."""
    return PiecewiseLinearFn(domain, ((domain.lo, value), (domain.hi, value)))


def pl_extrema(f: PiecewiseLinearFn) -> Extrema:
    """Exact extrema; witnesses are the leftmost breakpoints attaining them."""
    min_i = max_i = 0
    for i, y in enumerate(f.ys):
        if y < f.ys[min_i]:
            min_i = i
        if y > f.ys[max_i]:
            max_i = i
    return Extrema(
        min_value=f.ys[min_i],
        min_at=f.xs[min_i],
        max_value=f.ys[max_i],
        max_at=f.xs[max_i],
    )


def pl_restricted_range(
    f: PiecewiseLinearFn, lo: float, hi: float
) -> tuple[float, float]:
    """Exact (min, max) of ``f`` over the sub-range [lo, hi]."""
    values = [pl_eval(f, lo), pl_eval(f, hi)]
    values.extend(y for x, y in f.breakpoints if lo < x < hi)
    return min(values), max(values)


class CombineOp(enum.Enum):
    """Pointwise operations under which piecewise-linear functions are closed."""

    MIN = "min"
    MAX = "max"
    CLAMPED_SUM = "clamped_sum"
    CLAMPED_DIFF = "clamped_diff"

    def apply(self, a: float, b: float) -> float:
        if self is CombineOp.MIN:
            return min(a, b)
        if self is CombineOp.MAX:
            return max(a, b)
        if self is CombineOp.CLAMPED_SUM:
            return min(a + b, 1.0)
        return max(a - b, 0.0)

    def switch(self, a: float, b: float) -> float:
        """The linear quantity whose sign change is a kink of the result."""
        if self is CombineOp.CLAMPED_SUM:
            return a + b - 1.0
        return a - b


def merged_breakpoints(fns: Iterable[PiecewiseLinearFn]) -> tuple[float, ...]:
    """Sorted union of the breakpoint abscissae of ``fns``."""
    return tuple(sorted({x for f in fns for x in f.xs}))


def _require_same_domain(f: BaseMembershipFn, g: BaseMembershipFn) -> None:
    if f.domain != g.domain:
        raise DomainError(
            f"domains differ: [{f.domain.lo}, {f.domain.hi}] vs "
            f"[{g.domain.lo}, {g.domain.hi}]"
        )


def pl_combine(
    f: PiecewiseLinearFn,
    g: PiecewiseLinearFn,
    op: CombineOp | Callable[[float, float], float],
    step: float | None = None,
) -> PiecewiseLinearFn | SampledFn:
    """Combine two functions pointwise.

    A :class:`CombineOp` gives an exact result whose breakpoints are the
    merged breakpoints plus every interior sign change of the op's switching
    quantity. Any other binary callable is sampled on a uniform grid.
    """
    _require_same_domain(f, g)
    if not isinstance(op, CombineOp):
        logger.info("pointwise op %r has no exact form; sampling", op)
        vectorised = np.vectorize(op, otypes=[float])
        return SampledFn.sample(
            f.domain,
            lambda xs: vectorised(f.evaluate_many(xs), g.evaluate_many(xs)),
            step,
        )

    xs = merged_breakpoints((f, g))
    fa = [pl_eval(f, x) for x in xs]
    ga = [pl_eval(g, x) for x in xs]
    points: list[tuple[float, float]] = []
    for i, x in enumerate(xs):
        points.append((x, op.apply(fa[i], ga[i])))
        if i + 1 == len(xs):
            break
        h0 = op.switch(fa[i], ga[i])
        h1 = op.switch(fa[i + 1], ga[i + 1])
        if h0 * h1 < 0:
            xk = x + (xs[i + 1] - x) * (h0 / (h0 - h1))
            if x < xk < xs[i + 1]:
                points.append((xk, op.apply(pl_eval(f, xk), pl_eval(g, xk))))
    clamped = tuple((x, min(max(y, 0.0), 1.0)) for x, y in points)
    return PiecewiseLinearFn(f.domain, clamped)


def pl_combine_all(
    fns: Sequence[PiecewiseLinearFn], op: CombineOp
) -> PiecewiseLinearFn:
    """Left fold of an exact pointwise op over ``fns`` (at least one)."""
    if not fns:
        raise ConstructionError("cannot fold an empty sequence of functions")
    return reduce(lambda acc, fn: pl_combine(acc, fn, op), fns[1:], fns[0])


def pl_affine_clamp(
    f: PiecewiseLinearFn, scale: float, offset: float, pivot: float = 0.0
) -> PiecewiseLinearFn:
    """Exact ``clamp(offset + scale * (f - pivot), 0, 1)``.

    Kinks are inserted where the affine image crosses 0 or 1 inside a segment.
    Ordinates equal to ``pivot`` map to ``offset`` without rounding.
    """

    def image(y: float) -> float:
        return offset + scale * (y - pivot)

    points: list[tuple[float, float]] = []
    for x0, y0, x1, y1 in f.segments():
        z0, z1 = image(y0), image(y1)
        points.append((x0, z0))
        crossings = []
        for level in (0.0, 1.0):
            if (z0 - level) * (z1 - level) < 0:
                t = (level - z0) / (z1 - z0)
                crossings.append((t, level))
        for t, level in sorted(crossings):
            xk = x0 + t * (x1 - x0)
            if x0 < xk < x1:
                points.append((xk, level))
    points.append((f.xs[-1], image(f.ys[-1])))
    clamped = tuple((x, min(max(z, 0.0), 1.0)) for x, z in points)
    return PiecewiseLinearFn(f.domain, clamped)


def _solve(x0: float, y0: float, x1: float, y1: float, level: float) -> float:
    if level == y0:
        return x0
    if level == y1:
        return x1
    return x0 + (level - y0) * (x1 - x0) / (y1 - y0)


def pl_level_set(f: PiecewiseLinearFn, t: float, tol: float = 0.0) -> LevelSet:
    """The set {x : |f(x) - t| <= tol} as disjoint points and intervals."""
    low, high = t - tol, t + tol
    pieces: list[ClosedRange] = []
    for x0, y0, x1, y1 in f.segments():
        if y0 == y1:
            if low <= y0 <= high:
                pieces.append(ClosedRange(x0, x1))
            continue
        a = _solve(x0, y0, x1, y1, low)
        b = _solve(x0, y0, x1, y1, high)
        left, right = max(min(a, b), x0), min(max(a, b), x1)
        if left <= right:
            pieces.append(ClosedRange(left, right))
    return LevelSet(_merge(pieces))


@dataclass(frozen=True)
class UnimodalCheck:
    """Whether a function rises to a single unit plateau and then falls."""

    holds: bool
    plateau: ClosedRange | None = None
    reason: str = ""
    segment: tuple[float, float] | None = None
    """First violating segment, when there is one."""


def pl_is_unimodal_with_plateau(
    f: PiecewiseLinearFn, tol: float = BOUNDARY_TOL
) -> UnimodalCheck:
    """Check: unit plateau exists, non-decreasing before it, non-increasing after."""
    xs, ys = f.xs, f.ys
    top = [i for i, y in enumerate(ys) if y >= 1.0 - tol]
    if not top:
        peak = pl_extrema(f)
        return UnimodalCheck(
            False,
            reason=(
                f"never reaches 1 (maximum {peak.max_value:g} "
                f"at x = {peak.max_at:g})"
            ),
        )
    first, last = top[0], top[-1]
    for k in range(first):
        if ys[k + 1] < ys[k] - tol:
            return UnimodalCheck(
                False,
                reason="decreases before reaching the unit plateau",
                segment=(xs[k], xs[k + 1]),
            )
    for k in range(first, last):
        if ys[k + 1] < 1.0 - tol:
            return UnimodalCheck(
                False,
                reason="leaves 1 between two maximizers",
                segment=(xs[k], xs[k + 1]),
            )
    for k in range(last, len(ys) - 1):
        if ys[k + 1] > ys[k] + tol:
            return UnimodalCheck(
                False,
                reason="increases after the unit plateau",
                segment=(xs[k], xs[k + 1]),
            )
    return UnimodalCheck(True, plateau=ClosedRange(xs[first], xs[last]))
