"""Membership measures, judgements and fuzzy sets derived from a partition."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Literal, Mapping

import numpy as np

from vague_membership.config import BOUNDARY_TOL
from vague_membership.connectives import (
    ConnectiveTriple,
    TConormKind,
    TNormKind,
    negation_array,
    tconorm_array,
    tconorm_fold,
    tnorm_array,
)
from vague_membership.errors import (
    BindingError,
    ConstructionError,
    CrossPartitionError,
    DomainError,
)
from vague_membership.expr import (
    And,
    Atom,
    Bot,
    Neg,
    Or,
    Top,
    VagueExpr,
    as_expr,
    atoms_of,
    children,
    fold_expr,
    format_expr,
)
from vague_membership.partition import VaguePartition
from vague_membership.plfunc import (
    CombineOp,
    PiecewiseLinearFn,
    SampledFn,
    pl_affine_clamp,
    pl_combine,
    pl_combine_all,
    pl_constant,
    pl_eval,
)
from vague_membership.protocols import BaseMembershipFn, Estimate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Judgement:
    """Degrees to which one object has each elementary value."""

    x: float | None
    degrees: Mapping[str, float]

    def __post_init__(self) -> None:
        degrees = {str(k): float(v) for k, v in self.degrees.items()}
        for name, value in degrees.items():
            if not 0.0 <= value <= 1.0:
                raise DomainError(f"degree of {name!r} is {value!r}, not in [0, 1]")
        object.__setattr__(self, "degrees", degrees)

    @classmethod
    def from_degrees(
        cls, degrees: Mapping[str, float], x: float | None = None
    ) -> Judgement:
        """A direct judgement, not derived from a partition."""
        return cls(x, degrees)

    @property
    def names(self) -> list[str]:
        return list(self.degrees)

    def values(self) -> list[float]:
        return list(self.degrees.values())


def judge(p: VaguePartition, x: float) -> Judgement:
    """Evaluate every block of ``p`` at ``x``."""
    p.domain.require(x)
    return Judgement(x, {b.name: pl_eval(b.fn, x) for b in p.blocks})


def _require_bound(e: VagueExpr, known: list[str]) -> None:
    missing = atoms_of(e) - set(known)
    if missing:
        raise BindingError(missing, known)


def _operands(node: VagueExpr) -> tuple[VagueExpr, ...]:
    # strong negations are involutions, so !!e folds straight to e
    if _is_cancelled(node):
        return (node.child.child,)
    return children(node)


def _is_cancelled(node: VagueExpr) -> bool:
    return isinstance(node, Neg) and isinstance(node.child, Neg)


def eval_measure(j: Judgement, triple: ConnectiveTriple, e: VagueExpr | str) -> float:
    """Degree of ``e`` under the judgement ``j``.

    Raises:
        BindingError: If ``e`` names a value missing from ``j``.
    """
    e = as_expr(e)
    _require_bound(e, j.names)

    def combine(node: VagueExpr, values: list[float]) -> float:
        if isinstance(node, Bot):
            return 0.0
        if isinstance(node, Top):
            return 1.0
        if isinstance(node, Atom):
            return j.degrees[node.name]
        if isinstance(node, Neg):
            (value,) = values
            return value if _is_cancelled(node) else triple.neg(value)
        if isinstance(node, And):
            return triple.conj(*values)
        return triple.disj(*values)

    return fold_expr(e, combine, _operands)


@dataclass(frozen=True)
class AxiomResidual:
    """One value's degree plus the t-conorm fold of all the others."""

    block: str
    degree: float
    rest: float

    @property
    def total(self) -> float:
        return self.degree + self.rest


@dataclass(frozen=True)
class MembershipSpaceReport:
    """Axiom I / Axiom V verdicts and the space classification at one object."""

    axiom1: bool
    axiom5: bool
    residuals: tuple[AxiomResidual, ...]
    regular: bool
    normal: bool
    tconorm: TConormKind
    witness: str | None = None
    """First value violating Axiom V."""

    @property
    def crisp(self) -> bool:
        return self.normal

    def to_dict(self) -> dict:
        return {
            "axiom1": self.axiom1,
            "axiom5": self.axiom5,
            "regular": self.regular,
            "normal": self.normal,
            "crisp": self.crisp,
            "tconorm": self.tconorm.value,
            "witness": self.witness,
            "residuals": {r.block: r.total for r in self.residuals},
        }


def check_axioms(
    j: Judgement, triple: ConnectiveTriple, tol: float = BOUNDARY_TOL
) -> MembershipSpaceReport:
    """Check Axioms I and V and classify the space at one object.

    A space is regular when ``M(p) + fold(others) = 1`` for every value p,
    and normal when Axioms I and V hold and some value has degree 1. Under
    Axiom V a unit degree forces the others to 0, so normal implies regular.
    """
    values = j.values()
    names = j.names
    axiom1 = any(v > 0.0 for v in values)
    residuals = tuple(
        AxiomResidual(
            names[i],
            values[i],
            tconorm_fold(triple.tconorm, values[:i] + values[i + 1 :]),
        )
        for i in range(len(values))
    )
    witness = next((r.block for r in residuals if not 0.0 < r.total <= 1.0 + tol), None)
    axiom5 = witness is None
    return MembershipSpaceReport(
        axiom1=axiom1,
        axiom5=axiom5,
        residuals=residuals,
        regular=bool(residuals) and all(abs(r.total - 1.0) <= tol for r in residuals),
        normal=axiom1 and axiom5 and any(v >= 1.0 - tol for v in values),
        tconorm=triple.tconorm,
        witness=witness,
    )


def _derive_exact(
    p: VaguePartition, triple: ConnectiveTriple, e: VagueExpr
) -> PiecewiseLinearFn:
    def combine(node: VagueExpr, fns: list[PiecewiseLinearFn]) -> PiecewiseLinearFn:
        if isinstance(node, Bot):
            return pl_constant(p.domain, 0.0)
        if isinstance(node, Top):
            return pl_constant(p.domain, 1.0)
        if isinstance(node, Atom):
            return p.fn(node.name)
        if isinstance(node, Neg):
            (fn,) = fns
            return fn if _is_cancelled(node) else pl_affine_clamp(fn, -1.0, 1.0)
        left, right = fns
        if isinstance(node, And):
            if triple.tnorm is TNormKind.MINIMUM:
                return pl_combine(left, right, CombineOp.MIN)
            # T_L(a, b) = max(a - N(b), 0)
            negated = pl_affine_clamp(right, -1.0, 1.0)
            return pl_combine(left, negated, CombineOp.CLAMPED_DIFF)
        if triple.tconorm is TConormKind.MAXIMUM:
            return pl_combine(left, right, CombineOp.MAX)
        return pl_combine(left, right, CombineOp.CLAMPED_SUM)

    return fold_expr(e, combine, _operands)


def _derive_sampled(
    p: VaguePartition, triple: ConnectiveTriple, e: VagueExpr, step: float | None
) -> SampledFn:
    def evaluate(xs: np.ndarray) -> np.ndarray:
        blocks = {b.name: b.fn.evaluate_many(xs) for b in p.blocks}

        def combine(node: VagueExpr, arrays: list[np.ndarray]) -> np.ndarray:
            if isinstance(node, Bot):
                return np.zeros_like(xs)
            if isinstance(node, Top):
                return np.ones_like(xs)
            if isinstance(node, Atom):
                return blocks[node.name]
            if isinstance(node, Neg):
                (values,) = arrays
                if _is_cancelled(node):
                    return values
                return negation_array(triple.negation, values)
            if isinstance(node, And):
                return tnorm_array(triple.tnorm, *arrays)
            return tconorm_array(triple.tconorm, *arrays)

        return fold_expr(e, combine, _operands)

    logger.info(
        "triple %s is not closed on piecewise-linear functions; sampling %s",
        triple.name,
        format_expr(e),
    )
    return SampledFn.sample(p.domain, evaluate, step)


@dataclass(frozen=True, eq=False)
class FuzzySet:
    """A membership function derived from a partition's blocks by an expression."""

    partition: VaguePartition
    expr: VagueExpr
    triple: ConnectiveTriple
    derived_fn: BaseMembershipFn

    @property
    def exact(self) -> bool:
        return self.derived_fn.exact

    def __call__(self, x: float) -> float:
        return fs_membership(self, x)

    def __str__(self) -> str:
        return format_expr(self.expr)


def derive_fuzzy_set(
    p: VaguePartition,
    triple: ConnectiveTriple,
    e: VagueExpr | str,
    grid_step: float | None = None,
) -> FuzzySet:
    """Materialise the membership function of ``e`` over ``p``.

    The result is exact piecewise-linear when the triple keeps PL functions
    closed (minimum or Lukasiewicz t-norm with the standard negation), and a
    flagged sampled approximation otherwise.
    """
    e = as_expr(e)
    _require_bound(e, p.names)
    if triple.preserves_pl:
        derived: BaseMembershipFn = _derive_exact(p, triple, e)
    else:
        derived = _derive_sampled(p, triple, e, grid_step)
    return FuzzySet(p, e, triple, derived)


def fs_membership(fs: FuzzySet, x: float) -> float:
    """Degree of ``x`` in ``fs`` by direct evaluation of its expression."""
    return eval_measure(judge(fs.partition, x), fs.triple, fs.expr)


def fs_combine(a: FuzzySet, b: FuzzySet, op: Literal["and", "or"]) -> FuzzySet:
    """Conjoin or disjoin two fuzzy sets over the same partition and triple.

    Raises:
        CrossPartitionError: If the partitions or triples differ.
    """
    if a.partition is not b.partition and a.partition != b.partition:
        raise CrossPartitionError(
            f"cannot combine a fuzzy set over {a.partition.concept or '?'}/"
            f"{a.partition.attribute or '?'} with one over "
            f"{b.partition.concept or '?'}/{b.partition.attribute or '?'}: "
            f"membership is only compositional within one vague partition"
        )
    if a.triple != b.triple:
        raise CrossPartitionError(
            f"cannot combine fuzzy sets under triples {a.triple.name} "
            f"and {b.triple.name}"
        )
    node: Callable[[VagueExpr, VagueExpr], VagueExpr]
    if op == "and":
        node = And
    elif op == "or":
        node = Or
    else:
        raise ConstructionError(f"combination must be 'and' or 'or', got {op!r}")
    step = getattr(a.derived_fn, "step", None)
    return derive_fuzzy_set(a.partition, a.triple, node(a.expr, b.expr), step)


def sharpness(p: VaguePartition, triple: ConnectiveTriple, x: float) -> Estimate:
    """The t-conorm fold of the judgement at ``x``."""
    value = tconorm_fold(triple.tconorm, judge(p, x).values())
    return Estimate(value, witness=x)


def separation(
    p: VaguePartition, triple: ConnectiveTriple, grid_step: float | None = None
) -> Estimate:
    """One minus the least sharpness over the domain."""
    if triple.tconorm in (TConormKind.MAXIMUM, TConormKind.BOUNDED_SUM):
        op = (
            CombineOp.MAX
            if triple.tconorm is TConormKind.MAXIMUM
            else CombineOp.CLAMPED_SUM
        )
        low = pl_combine_all(p.functions, op).extrema()
        return Estimate(1.0 - low.min_value, witness=low.min_at)

    def fold(xs: np.ndarray) -> np.ndarray:
        acc = np.zeros_like(xs)
        for fn in p.functions:
            acc = tconorm_array(triple.tconorm, acc, fn.evaluate_many(xs))
        return acc

    sampled = SampledFn.sample(p.domain, fold, grid_step)
    low = sampled.extrema()
    return Estimate(
        1.0 - low.min_value, witness=low.min_at, exact=False, grid_step=sampled.step
    )


def consistent_degree(
    p: VaguePartition,
    triple: ConnectiveTriple,
    a: VagueExpr | str,
    b: VagueExpr | str,
    grid_step: float | None = None,
) -> Estimate:
    """Largest degree of ``a & b`` over the domain."""
    fs = derive_fuzzy_set(p, triple, And(as_expr(a), as_expr(b)), grid_step)
    peak = fs.derived_fn.extrema()
    return Estimate(
        peak.max_value,
        witness=peak.max_at,
        exact=fs.exact,
        grid_step=None if fs.exact else fs.derived_fn.step,
    )


def incompatible(
    p: VaguePartition,
    triple: ConnectiveTriple,
    a: VagueExpr | str,
    b: VagueExpr | str,
    tol: float = BOUNDARY_TOL,
    grid_step: float | None = None,
) -> bool:
    """Whether ``a`` and ``b`` never hold together to a positive degree."""
    return consistent_degree(p, triple, a, b, grid_step).value <= tol


def intuitionistic_pair(fs: FuzzySet, x: float) -> tuple[float, float]:
    """Membership and non-membership ``(mu, N(mu))`` of ``x``."""
    mu = fs_membership(fs, x)
    return mu, fs.triple.neg(mu)
