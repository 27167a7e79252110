"""Abstract base classes shared by exact and sampled membership functions."""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from vague_membership.plfunc import Interval


@dataclass(frozen=True)
class Extrema:
    """Minimum and maximum of a membership function with witnesses."""

    min_value: float
    min_at: float
    max_value: float
    max_at: float


@dataclass(frozen=True)
class Estimate:
    """A derived degree together with how it was obtained."""

    value: float
    witness: float | None = None
    exact: bool = True
    grid_step: float | None = None
    """Sampling step when ``exact`` is False."""

    @property
    def method(self) -> str:
        return "exact" if self.exact else f"grid (step {self.grid_step:g})"


class BaseMembershipFn(ABC):
    """A function from a closed interval to [0, 1]."""

    domain: Interval

    @abstractmethod
    def __call__(self, x: float) -> float:
        """Evaluate at a single point of the domain."""

    @abstractmethod
    def evaluate_many(self, xs: np.ndarray) -> np.ndarray:
        """Evaluate at many points at once."""

    @abstractmethod
    def extrema(self) -> Extrema:
        """Global minimum and maximum with the smallest witnesses."""

    @property
    @abstractmethod
    def exact(self) -> bool:
        """False for sampled approximations."""
