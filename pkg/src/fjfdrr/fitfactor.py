"""Fit factor ranking: shortest-burst ranks, the weighted factor, and run order."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import SchedulingError, Workload


class InvalidWeights(SchedulingError):
    pass


@dataclass(frozen=True)
class Weights:
    """Weights for user priority and burst rank. Must be positive and sum to 1."""

    up_weight: Fraction = Fraction(3, 5)
    bt_weight: Fraction = Fraction(2, 5)

    def __post_init__(self) -> None:
        object.__setattr__(self, "up_weight", Fraction(self.up_weight))
        object.__setattr__(self, "bt_weight", Fraction(self.bt_weight))
        if self.up_weight <= 0 or self.bt_weight <= 0:
            raise InvalidWeights("weights must be positive")
        if self.up_weight + self.bt_weight != 1:
            raise InvalidWeights(
                f"weights must sum to 1, got {self.up_weight} + {self.bt_weight}"
            )

    @classmethod
    def from_ratio(cls, text: str) -> "Weights":
        """Parse ``"UP:BT"`` (e.g. ``"3:2"``) and normalise it to sum to 1."""
        try:
            up_s, bt_s = text.split(":")
            up, bt = Fraction(up_s), Fraction(bt_s)
        except ValueError as exc:
            raise InvalidWeights(f"expected UP:BT, got {text!r}") from exc
        if up <= 0 or bt <= 0:
            raise InvalidWeights("weights must be positive")
        return cls(up / (up + bt), bt / (up + bt))


DEFAULT_WEIGHTS = Weights()


@dataclass(frozen=True)
class FitEntry:
    sp: int
    f: Fraction


@dataclass(frozen=True)
class FitRanking:
    per_process: dict[str, FitEntry]
    order: tuple[str, ...]


def assign_sp_ranks(workload: Workload) -> dict[str, int]:
    """Rank processes 1..n by ascending burst; equal bursts keep input order."""
    # sorted() is stable, so equal bursts keep their input order
    ranked = sorted(workload, key=lambda p: p.burst)
    return {p.pid: rank for rank, p in enumerate(ranked, start=1)}


def fit_factor(up: int, sp: int, weights: Weights = DEFAULT_WEIGHTS) -> Fraction:
    return up * weights.up_weight + sp * weights.bt_weight


def fjfdrr_order(workload: Workload, weights: Weights = DEFAULT_WEIGHTS) -> FitRanking:
    """Order by ascending f, then ascending user priority, then input order."""
    sp = assign_sp_ranks(workload)
    entries = {
        p.pid: FitEntry(sp[p.pid], fit_factor(p.user_priority, sp[p.pid], weights))
        for p in workload
    }
    order = sorted(workload, key=lambda p: (entries[p.pid].f, p.user_priority))
    return FitRanking(entries, tuple(p.pid for p in order))
