"""Round-based executor plus the FJFDRR, PBSRR and classic baseline schedulers."""

from __future__ import annotations

from .core import EmptyWorkload, Process, Schedule, Segment, Workload
from .fitfactor import DEFAULT_WEIGHTS, Weights
from .ordering import (
    FitFactor,
    InputOrder,
    OrderingPolicy,
    ShortestBurst,
    UserPriority,
    policy_order,
)
from .quantum import MedianDynamic, QuantumPolicy, Static, next_quantum


def run_round_based(
    workload: Workload,
    order: OrderingPolicy,
    quantum: QuantumPolicy,
    algorithm: str = "RR",
) -> Schedule:
    """Run rounds over a queue sorted once at t=0.

    Each round computes one quantum from the remaining bursts of the
    unfinished processes, then gives every unfinished process, in queue
    order, ``min(quantum, remaining)`` consecutive ticks.
    """
    if not len(workload):
        raise EmptyWorkload()
    workload.require_simultaneous_arrival()

    queue = policy_order(workload, order)
    remaining = {p.pid: p.burst for p in queue}
    segments: list[Segment] = []
    history: list[int] = []
    now = 0

    while queue:
        tq = next_quantum(quantum, [remaining[p.pid] for p in queue])
        history.append(tq)
        for p in queue:
            run = min(tq, remaining[p.pid])
            segments.append(Segment(p.pid, now, now + run))
            now += run
            remaining[p.pid] -= run
        queue = [p for p in queue if remaining[p.pid]]

    return Schedule(algorithm, tuple(segments), tuple(history))


def fjfdrr(workload: Workload, weights: Weights = DEFAULT_WEIGHTS) -> Schedule:
    return run_round_based(workload, FitFactor(weights), MedianDynamic(), "FJFDRR")


def pbsrr(workload: Workload, q: int = 15) -> Schedule:
    return run_round_based(workload, UserPriority(), Static(q), "PBSRR")


def rr(workload: Workload, q: int = 15) -> Schedule:
    return run_round_based(workload, InputOrder(), Static(q), "RR")


def _non_preemptive(workload: Workload, key, algorithm: str) -> Schedule:
    # Among arrived processes pick the smallest key; input order breaks ties.
    if not len(workload):
        raise EmptyWorkload()
    pending: list[tuple[int, Process]] = list(enumerate(workload))
    segments: list[Segment] = []
    now = min(p.arrival for p in workload)
    while pending:
        ready = [item for item in pending if item[1].arrival <= now]
        if not ready:
            now = min(p.arrival for _, p in pending)
            continue
        chosen = min(ready, key=lambda item: (key(item[1]), item[0]))
        pending.remove(chosen)
        p = chosen[1]
        segments.append(Segment(p.pid, now, now + p.burst))
        now += p.burst
    return Schedule(algorithm, tuple(segments), ())


def fcfs(workload: Workload) -> Schedule:
    return _non_preemptive(workload, lambda p: p.arrival, "FCFS")


def sjf(workload: Workload) -> Schedule:
    return _non_preemptive(workload, lambda p: p.burst, "SJF")


def priority_np(workload: Workload) -> Schedule:
    return _non_preemptive(workload, lambda p: p.user_priority, "PRIORITY")


# Equivalent round-based form for each non-preemptive baseline when all
# arrivals are 0: one round with a quantum no process can exceed.
NON_PREEMPTIVE_ORDER: dict[str, OrderingPolicy] = {
    "FCFS": InputOrder(),
    "SJF": ShortestBurst(),
    "PRIORITY": UserPriority(),
}
