"""Unit-tick reference simulator.

Walks the clock one tick at a time with an explicit round cursor and
slice counter. It deliberately shares nothing with the engine's round loop
(including the median computation) so the two can check each other.
"""

from __future__ import annotations

import statistics

from .core import Schedule, Segment, Workload
from .ordering import OrderingPolicy, policy_order
from .quantum import QuantumPolicy, Static


def _round_quantum(quantum: QuantumPolicy, remaining: list[int]) -> int:
    if isinstance(quantum, Static):
        return quantum.q
    lo = statistics.median_low(remaining)
    hi = statistics.median_high(remaining)
    return (lo + hi) // 2


def tick_simulate(
    workload: Workload,
    order: OrderingPolicy,
    quantum: QuantumPolicy,
    algorithm: str = "oracle",
) -> Schedule:
    workload.require_simultaneous_arrival()
    queue = [p.pid for p in policy_order(workload, order)]
    left = {p.pid: p.burst for p in workload}

    segments: list[Segment] = []
    history: list[int] = []
    cursor = len(queue)  # forces a new round on the first tick
    running = None
    seg_start = 0
    tq = 0
    used = 0
    t = 0

    while any(left.values()):
        if running is None:
            # advance to the next unfinished process in this round
            cursor += 1
            while cursor < len(queue) and left[queue[cursor]] == 0:
                cursor += 1
            if cursor >= len(queue):
                tq = _round_quantum(quantum, [r for r in left.values() if r])
                history.append(tq)
                cursor = 0
                while left[queue[cursor]] == 0:
                    cursor += 1
            running = queue[cursor]
            seg_start = t
            used = 0

        left[running] -= 1
        used += 1
        t += 1

        if left[running] == 0 or used == tq:
            segments.append(Segment(running, seg_start, t))
            running = None

    return Schedule(algorithm, tuple(segments), tuple(history))
