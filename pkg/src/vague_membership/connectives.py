"""Triangular norms, triangular conorms and negations on the unit interval.

Scalar kernels are written once, generically over real numbers, so the same
formula serves float evaluation and the exact rational grid used to certify
N-duality. Array kernels mirror them for numpy-backed sampling.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, NamedTuple, TypeVar

import numpy as np

from vague_membership.config import DUALITY_TOL
from vague_membership.errors import (
    ConstructionError,
    DomainError,
    PreconditionError,
    UnsupportedError,
)

_E = TypeVar("_E", bound=enum.Enum)


def _lookup(enum_cls: type[_E], name: str, what: str) -> _E:
    key = name.strip().lower()
    for member in enum_cls:
        if member.value == key:
            return member
    choices = ", ".join(m.value for m in enum_cls)
    raise ConstructionError(f"unknown {what} {name!r}; choose from: {choices}")


class TNormKind(enum.Enum):
    """The four basic t-norms."""

    MINIMUM = "min"
    PRODUCT = "product"
    LUKASIEWICZ = "lukasiewicz"
    DRASTIC = "drastic"

    @classmethod
    def from_name(cls, name: str) -> TNormKind:
        return _lookup(cls, name, "t-norm")


class TConormKind(enum.Enum):
    """The four basic t-conorms."""

    MAXIMUM = "max"
    PROBABILISTIC_SUM = "probsum"
    BOUNDED_SUM = "boundedsum"
    DRASTIC = "drastic"

    @classmethod
    def from_name(cls, name: str) -> TConormKind:
        return _lookup(cls, name, "t-conorm")


class NegationClass(enum.IntEnum):
    """Negation hierarchy; a higher value implies every lower one."""

    NEGATION = 1
    STRICT = 2
    STRONG = 3


class NegationKind(enum.Enum):
    """Negations: the standard one, 1 - x^2, and the Goedel negation."""

    STANDARD = "standard"
    STRICT_SQUARE = "square"
    GOEDEL = "goedel"

    @classmethod
    def from_name(cls, name: str) -> NegationKind:
        return _lookup(cls, name, "negation")

    @property
    def classification(self) -> NegationClass:
        return _NEGATION_CLASSES[self]

    @property
    def is_strong(self) -> bool:
        return self.classification is NegationClass.STRONG


_NEGATION_CLASSES = {
    NegationKind.STANDARD: NegationClass.STRONG,
    NegationKind.STRICT_SQUARE: NegationClass.STRICT,
    NegationKind.GOEDEL: NegationClass.NEGATION,
}

_STANDARD_DUALS = {
    TNormKind.MINIMUM: TConormKind.MAXIMUM,
    TNormKind.PRODUCT: TConormKind.PROBABILISTIC_SUM,
    TNormKind.LUKASIEWICZ: TConormKind.BOUNDED_SUM,
    TNormKind.DRASTIC: TConormKind.DRASTIC,
}


# Generic kernels. Arguments are sorted where the textbook formula is not
# bit-symmetric in floating point, so commutativity holds exactly.


def _tnorm(kind: TNormKind, x, y):
    if kind is TNormKind.MINIMUM:
        return min(x, y)
    if kind is TNormKind.PRODUCT:
        return x * y
    if kind is TNormKind.LUKASIEWICZ:
        a, b = (x, y) if x <= y else (y, x)
        return max(a - (1 - b), 0)
    if x == 1:
        return y
    if y == 1:
        return x
    return 0


def _tconorm(kind: TConormKind, x, y):
    if kind is TConormKind.MAXIMUM:
        return max(x, y)
    if kind is TConormKind.PROBABILISTIC_SUM:
        a, b = (x, y) if x <= y else (y, x)
        return min(b + a * (1 - b), 1)
    if kind is TConormKind.BOUNDED_SUM:
        return min(x + y, 1)
    if x == 0:
        return y
    if y == 0:
        return x
    return 1


def _negation(kind: NegationKind, x):
    if kind is NegationKind.STANDARD:
        return 1 - x
    if kind is NegationKind.STRICT_SQUARE:
        return 1 - x * x
    return 1 if x == 0 else 0


def _check_degree(value: float, name: str = "x") -> None:
    if not 0.0 <= value <= 1.0:
        raise DomainError(f"{name} = {value!r} is not a degree in [0, 1]")


def tnorm_apply(kind: TNormKind, x: float, y: float) -> float:
    """Evaluate the t-norm ``kind`` at (x, y)."""
    _check_degree(x, "x")
    _check_degree(y, "y")
    return float(_tnorm(kind, x, y))


def tconorm_apply(kind: TConormKind, x: float, y: float) -> float:
    """Evaluate the t-conorm ``kind`` at (x, y)."""
    _check_degree(x, "x")
    _check_degree(y, "y")
    return float(_tconorm(kind, x, y))


def negation_apply(kind: NegationKind, x: float) -> float:
    """Evaluate the negation ``kind`` at x."""
    _check_degree(x)
    return float(_negation(kind, x))


def tnorm_fold(kind: TNormKind, values: Iterable[float]) -> float:
    """Left fold of the t-norm in argument order; the empty fold is 1."""
    return float(reduce(lambda acc, v: _tnorm(kind, acc, v), values, 1.0))


def tconorm_fold(kind: TConormKind, values: Iterable[float]) -> float:
    """Left fold of the t-conorm in argument order; the empty fold is 0."""
    return float(reduce(lambda acc, v: _tconorm(kind, acc, v), values, 0.0))


def tnorm_array(kind: TNormKind, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Vectorised t-norm with the same formulas as :func:`tnorm_apply`."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if kind is TNormKind.MINIMUM:
        return np.minimum(x, y)
    if kind is TNormKind.PRODUCT:
        return x * y
    if kind is TNormKind.LUKASIEWICZ:
        a, b = np.minimum(x, y), np.maximum(x, y)
        return np.maximum(a - (1.0 - b), 0.0)
    return np.where(x == 1.0, y, np.where(y == 1.0, x, 0.0))


def tconorm_array(kind: TConormKind, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Vectorised t-conorm with the same formulas as :func:`tconorm_apply`."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if kind is TConormKind.MAXIMUM:
        return np.maximum(x, y)
    if kind is TConormKind.PROBABILISTIC_SUM:
        a, b = np.minimum(x, y), np.maximum(x, y)
        return np.minimum(b + a * (1.0 - b), 1.0)
    if kind is TConormKind.BOUNDED_SUM:
        return np.minimum(x + y, 1.0)
    return np.where(x == 0.0, y, np.where(y == 0.0, x, 1.0))


def negation_array(kind: NegationKind, x: np.ndarray) -> np.ndarray:
    """Vectorised negation."""
    x = np.asarray(x, dtype=float)
    if kind is NegationKind.STANDARD:
        return 1.0 - x
    if kind is NegationKind.STRICT_SQUARE:
        return 1.0 - x * x
    return np.where(x == 0.0, 1.0, 0.0)


def dual_of(tnorm: TNormKind, negation: NegationKind) -> TConormKind:
    """Return the conorm N-dual to ``tnorm`` under the standard negation."""
    if negation is not NegationKind.STANDARD:
        raise UnsupportedError(
            f"dual pairing is only tabulated for the standard negation, "
            f"not {negation.value!r}"
        )
    return _STANDARD_DUALS[tnorm]


class TripleSpec(NamedTuple):
    """An unverified (negation, t-norm, t-conorm) combination."""

    negation: NegationKind
    tnorm: TNormKind
    tconorm: TConormKind


@dataclass(frozen=True)
class DualityCheck:
    """Outcome of a grid duality certificate."""

    dual: bool
    residual: float
    witness: tuple[float, float] | None = None
    """Grid point of the worst residual (None when the residual is zero)."""


def _rational_grid(grid_step: float) -> list[Fraction]:
    step = Fraction(str(grid_step))
    points: list[Fraction] = []
    k = 0
    while k * step < 1:
        points.append(k * step)
        k += 1
    points.append(Fraction(1))
    return points


def check_duality(
    triple: ConnectiveTriple | TripleSpec,
    grid_step: float = 0.01,
    tol: float = DUALITY_TOL,
) -> DualityCheck:
    """Certify S(x, y) = N(T(N(x), N(y))) on a rational grid.

    The grid step is read as a decimal and every grid point is an exact
    fraction, so the residual reported for the basic pairs is exactly zero.
    """
    if not 0 < grid_step <= 1:
        raise PreconditionError(f"grid_step must lie in (0, 1], got {grid_step!r}")
    if not triple.negation.is_strong:
        raise PreconditionError(
            f"duality needs a strong negation; {triple.negation.value!r} is "
            f"{triple.negation.classification.name.lower()}"
        )
    return _certify(triple.negation, triple.tnorm, triple.tconorm, grid_step, tol)


@lru_cache(maxsize=None)
def _certify(
    negation: NegationKind,
    tnorm: TNormKind,
    tconorm: TConormKind,
    grid_step: float,
    tol: float,
) -> DualityCheck:
    grid = _rational_grid(grid_step)
    negated = [_negation(negation, v) for v in grid]
    worst = Fraction(0)
    witness: tuple[float, float] | None = None
    for i, x in enumerate(grid):
        for j, y in enumerate(grid):
            lhs = _tconorm(tconorm, x, y)
            rhs = _negation(negation, _tnorm(tnorm, negated[i], negated[j]))
            residual = abs(Fraction(lhs) - Fraction(rhs))
            if residual > worst:
                worst = residual
                witness = (float(x), float(y))
    return DualityCheck(dual=worst <= tol, residual=float(worst), witness=witness)


@dataclass(frozen=True)
class ConnectiveTriple:
    """A strong negation with a mutually N-dual t-norm and t-conorm."""

    negation: NegationKind = NegationKind.STANDARD
    tnorm: TNormKind = TNormKind.MINIMUM
    tconorm: TConormKind = TConormKind.MAXIMUM

    def __post_init__(self) -> None:
        if not self.negation.is_strong:
            raise PreconditionError(
                f"a connective triple needs a strong negation, "
                f"got {self.negation.value!r}"
            )
        check = check_duality(self)
        if not check.dual:
            raise ConstructionError(
                f"{self.tnorm.value!r} and {self.tconorm.value!r} are not "
                f"N-dual (residual {check.residual:g} at {check.witness})"
            )

    @property
    def name(self) -> str:
        return f"{self.negation.value},{self.tnorm.value},{self.tconorm.value}"

    @property
    def preserves_pl(self) -> bool:
        """Whether every derived membership function stays piecewise linear."""
        return self.tnorm in (TNormKind.MINIMUM, TNormKind.LUKASIEWICZ)

    def neg(self, x: float) -> float:
        return float(_negation(self.negation, x))

    def conj(self, x: float, y: float) -> float:
        return float(_tnorm(self.tnorm, x, y))

    def disj(self, x: float, y: float) -> float:
        return float(_tconorm(self.tconorm, x, y))


def parse_triple(text: str) -> ConnectiveTriple:
    """Read a triple from its "negation,tnorm,tconorm" string form."""
    parts = [p for p in (s.strip() for s in text.split(",")) if p]
    if len(parts) != 3:
        raise ConstructionError(
            f"triple must be 'negation,tnorm,tconorm', got {text!r}"
        )
    return ConnectiveTriple(
        negation=NegationKind.from_name(parts[0]),
        tnorm=TNormKind.from_name(parts[1]),
        tconorm=TConormKind.from_name(parts[2]),
    )


@dataclass(frozen=True)
class AxiomCheck:
    """Result of a grid certification of the t-norm / t-conorm axioms."""

    holds: bool
    violation: str | None = None


def _float_grid(grid_step: float) -> list[float]:
    n = round(1 / grid_step)
    return [i / n for i in range(n + 1)]


def _check_binary_axioms(op, unit: float, grid_step: float, assoc_tol: float):
    grid = _float_grid(grid_step)
    for x in grid:
        if op(x, unit) != x:
            return AxiomCheck(False, f"boundary fails at x={x}")
        for y in grid:
            if op(x, y) != op(y, x):
                return AxiomCheck(False, f"commutativity fails at ({x}, {y})")
            for z in grid:
                if y <= z and op(x, y) > op(x, z):
                    return AxiomCheck(False, f"monotonicity fails at ({x}, {y}, {z})")
                if abs(op(x, op(y, z)) - op(op(x, y), z)) > assoc_tol:
                    return AxiomCheck(False, f"associativity fails at ({x}, {y}, {z})")
    return AxiomCheck(True)


def check_tnorm_axioms(
    kind: TNormKind, grid_step: float = 0.1, assoc_tol: float = 1e-15
) -> AxiomCheck:
    """Check commutativity, associativity, monotonicity and T(x, 1) = x."""
    return _check_binary_axioms(
        lambda x, y: _tnorm(kind, x, y), 1.0, grid_step, assoc_tol
    )


def check_tconorm_axioms(
    kind: TConormKind, grid_step: float = 0.1, assoc_tol: float = 1e-15
) -> AxiomCheck:
    """Check commutativity, associativity, monotonicity and S(x, 0) = x."""
    return _check_binary_axioms(
        lambda x, y: _tconorm(kind, x, y), 0.0, grid_step, assoc_tol
    )


def check_negation_axioms(
    kind: NegationKind, grid_step: float = 0.01
) -> NegationClass | None:
    """Classify a negation from its values on an exact rational grid.

    Continuity is not observable on a grid; a strictly decreasing grid trace
    is taken as strict. Returns None if even N(0) = 1, N(1) = 0 fails.
    """
    grid = _rational_grid(grid_step)
    values = [_negation(kind, v) for v in grid]
    if values[0] != 1 or values[-1] != 0:
        return None
    if any(b > a for a, b in zip(values, values[1:])):
        return None
    if any(b >= a for a, b in zip(values, values[1:])):
        return NegationClass.NEGATION
    if any(_negation(kind, _negation(kind, v)) != v for v in grid):
        return NegationClass.STRICT
    return NegationClass.STRONG


_default_triple: ConnectiveTriple | None = None


def get_default_triple() -> ConnectiveTriple:
    """Get the default connective triple.

    Returns:
        The default triple (standard, min, max if not set).
    """
    global _default_triple
    if _default_triple is None:
        _default_triple = ConnectiveTriple()
    return _default_triple


def set_default_triple(triple: ConnectiveTriple) -> None:
    """Set the default connective triple.

    Args:
        triple: The triple to use when none is given explicitly.
    """
    global _default_triple
    _default_triple = triple
