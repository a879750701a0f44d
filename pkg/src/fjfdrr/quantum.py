"""Time quantum policies."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .core import SchedulingError


class EmptyRemaining(SchedulingError):
    def __init__(self) -> None:
        super().__init__("cannot compute a quantum with no remaining processes")


@dataclass(frozen=True)
class MedianDynamic:
    """Quantum recomputed each round as the median remaining burst."""


@dataclass(frozen=True)
class Static:
    q: int

    def __post_init__(self) -> None:
        if self.q < 1:
            raise SchedulingError(f"static quantum must be >= 1, got {self.q}")


QuantumPolicy = Union[MedianDynamic, Static]


def median_quantum(remaining: Sequence[int]) -> int:
    """Median of the remaining bursts; an even count floors the middle pair's mean."""
    if not remaining:
        raise EmptyRemaining()
    xs = sorted(remaining)
    mid = len(xs) // 2
    if len(xs) % 2:
        return xs[mid]
    return (xs[mid - 1] + xs[mid]) // 2


def next_quantum(policy: QuantumPolicy, remaining: Sequence[int]) -> int:
    if not remaining:
        raise EmptyRemaining()
    if isinstance(policy, Static):
        return policy.q
    return median_quantum(remaining)
