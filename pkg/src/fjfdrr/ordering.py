"""Ordering policies: how a workload is sorted once at t=0."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .core import Process, Workload
from .fitfactor import DEFAULT_WEIGHTS, Weights, fjfdrr_order


@dataclass(frozen=True)
class FitFactor:
    weights: Weights = DEFAULT_WEIGHTS


@dataclass(frozen=True)
class UserPriority:
    pass


@dataclass(frozen=True)
class InputOrder:
    pass


@dataclass(frozen=True)
class ShortestBurst:
    pass


OrderingPolicy = Union[FitFactor, UserPriority, InputOrder, ShortestBurst]


def policy_order(workload: Workload, policy: OrderingPolicy) -> list[Process]:
    """Total order of the workload under ``policy``. Ties fall back to input order."""
    if isinstance(policy, FitFactor):
        ranking = fjfdrr_order(workload, policy.weights)
        return [workload[pid] for pid in ranking.order]
    if isinstance(policy, UserPriority):
        return sorted(workload, key=lambda p: p.user_priority)
    if isinstance(policy, ShortestBurst):
        return sorted(workload, key=lambda p: p.burst)
    if isinstance(policy, InputOrder):
        return list(workload)
    raise TypeError(f"unknown ordering policy {policy!r}")
