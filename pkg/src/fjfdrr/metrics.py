"""Turnaround, waiting time and context-switch accounting."""

from __future__ import annotations

from fractions import Fraction

from .core import Metrics, ProcessMetrics, Schedule, SchedulingError, Workload


class ScheduleWorkloadMismatch(SchedulingError):
    pass


def compute_metrics(schedule: Schedule, workload: Workload) -> Metrics:
    """Per-process and average TAT/WT, and CS = segments - 1.

    Every segment boundary counts as a context switch, including a process
    continuing after its own quantum expired.
    """
    executed = schedule.executed()
    completion: dict[str, int] = {}
    for seg in schedule.segments:
        completion[seg.pid] = seg.end

    expected = {p.pid for p in workload}
    if set(executed) != expected:
        raise ScheduleWorkloadMismatch(
            f"schedule pids {sorted(executed)} != workload pids {sorted(expected)}"
        )
    per_process: dict[str, ProcessMetrics] = {}
    for p in workload:
        if executed[p.pid] != p.burst:
            raise ScheduleWorkloadMismatch(
                f"{p.pid} executed {executed[p.pid]} ticks, burst is {p.burst}"
            )
        tat = completion[p.pid] - p.arrival
        per_process[p.pid] = ProcessMetrics(completion[p.pid], tat, tat - p.burst)

    n = len(workload)
    return Metrics(
        per_process=per_process,
        avg_turnaround=Fraction(sum(m.turnaround for m in per_process.values()), n),
        avg_waiting=Fraction(sum(m.waiting for m in per_process.values()), n),
        context_switches=max(len(schedule.segments) - 1, 0),
    )
