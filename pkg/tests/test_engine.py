import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

from fjfdrr.cases import builtin_case
from fjfdrr.core import NonzeroArrival
from fjfdrr.engine import fcfs, fjfdrr, pbsrr, priority_np, rr, run_round_based, sjf
from fjfdrr.metrics import compute_metrics
from fjfdrr.ordering import FitFactor, InputOrder, ShortestBurst, UserPriority
from fjfdrr.quantum import MedianDynamic, Static

from conftest import make_workload, workloads


def segs(schedule):
    return [(s.pid, s.start, s.end) for s in schedule.segments]


def test_case4_timeline():
    s = fjfdrr(builtin_case(4))
    assert s.algorithm == "FJFDRR"
    assert s.quantum_history == (12, 54, 32)
    assert segs(s) == [
        ("P5", 0, 12), ("P4", 12, 21), ("P2", 21, 33), ("P1", 33, 34),
        ("P3", 34, 46), ("P5", 46, 100), ("P2", 100, 123), ("P5", 123, 155),
    ]


def test_case3_and_case2_rounds():
    s3 = run_round_based(builtin_case(3), FitFactor(), MedianDynamic())
    assert s3.quantum_history == (64, 30, 6)
    assert len(s3.segments) == 8 and s3.makespan == 292
    s2 = run_round_based(builtin_case(2), FitFactor(), MedianDynamic())
    assert s2.quantum_history == (61, 27, 9, 3)
    assert len(s2.segments) == 15


@pytest.mark.parametrize(
    "case, tat, wt, cs",
    [
        (4, Fraction(379, 5), Fraction(224, 5), 7),
        (3, Fraction(722, 5), Fraction(86), 7),
        (1, Fraction(441, 5), Fraction(53), 7),
    ],
)
def test_fjfdrr_metrics(case, tat, wt, cs):
    w = builtin_case(case)
    m = compute_metrics(fjfdrr(w), w)
    assert (m.avg_turnaround, m.avg_waiting, m.context_switches) == (tat, wt, cs)


@pytest.mark.parametrize(
    "case, tat, wt, cs",
    [(1, Fraction(102), Fraction(334, 5), 12), (4, Fraction(399, 5), Fraction(244, 5), 12)],
)
def test_pbsrr_metrics(case, tat, wt, cs):
    w = builtin_case(case)
    s = pbsrr(w, 15)
    assert s.algorithm == "PBSRR"
    m = compute_metrics(s, w)
    assert (m.avg_turnaround, m.avg_waiting, m.context_switches) == (tat, wt, cs)


def test_single_process_round_based():
    w = make_workload([9], [1])
    for s in (fjfdrr(w), pbsrr(w, 15), rr(w, 15)):
        assert segs(s) == [("P1", 0, 9)]
    assert fjfdrr(w).quantum_history == (9,)
    m = compute_metrics(pbsrr(w, 15), w)
    assert m.context_switches == 0 and m.per_process["P1"].waiting == 0


def test_round_based_rejects_late_arrival():
    w = make_workload([3, 4], [1, 2], arrivals=[0, 2])
    for run in (fjfdrr, lambda x: pbsrr(x, 15), lambda x: rr(x, 15)):
        with pytest.raises(NonzeroArrival) as info:
            run(w)
        assert info.value.pid == "P2"


def test_fcfs_case1():
    w = builtin_case(1)
    s = fcfs(w)
    assert [seg.pid for seg in s.segments] == ["P1", "P2", "P3", "P4", "P5"]
    assert s.quantum_history == ()
    assert compute_metrics(s, w).avg_waiting == Fraction(0 + 9 + 24 + 51 + 94, 5)


def test_sjf_sorted_input_matches_fcfs():
    w = builtin_case(1)
    assert sjf(w).segments == fcfs(w).segments


def test_priority_np_case1():
    s = priority_np(builtin_case(1))
    assert [seg.pid for seg in s.segments] == ["P4", "P2", "P5", "P3", "P1"]


def test_non_preemptive_with_arrivals():
    # P2 arrives at 10 while the CPU idles after P1 (burst 3) finishes
    w = make_workload([3, 4, 2], [2, 1, 3], arrivals=[0, 10, 10])
    assert segs(fcfs(w)) == [("P1", 0, 3), ("P2", 10, 14), ("P3", 14, 16)]
    assert segs(sjf(w)) == [("P1", 0, 3), ("P3", 10, 12), ("P2", 12, 16)]
    assert segs(priority_np(w)) == [("P1", 0, 3), ("P2", 10, 14), ("P3", 14, 16)]
    m = compute_metrics(fcfs(w), w)
    assert m.per_process["P2"].turnaround == 4 and m.per_process["P3"].waiting == 4


def test_sjf_only_picks_arrived_jobs():
    w = make_workload([10, 1], [1, 1], arrivals=[0, 2])
    assert segs(sjf(w)) == [("P1", 0, 10), ("P2", 10, 11)]


def test_ties_broken_by_input_order():
    w = make_workload([5, 5, 5], [2, 2, 2])
    assert [s.pid for s in sjf(w).segments] == ["P1", "P2", "P3"]
    assert [s.pid for s in priority_np(w).segments] == ["P1", "P2", "P3"]


ALL_ROUND_BASED = [
    (FitFactor(), MedianDynamic()),
    (UserPriority(), Static(15)),
    (InputOrder(), Static(7)),
    (ShortestBurst(), MedianDynamic()),
]


@settings(max_examples=200)
@given(workloads())
def test_work_conservation(w):
    for order, quantum in ALL_ROUND_BASED:
        s = run_round_based(w, order, quantum)
        assert s.executed() == {p.pid: p.burst for p in w}
        assert s.segments[0].start == 0
        for a, b in zip(s.segments, s.segments[1:]):
            assert a.end == b.start
        assert s.makespan == w.total_burst
    for s in (fcfs(w), sjf(w), priority_np(w)):
        assert len(s.segments) == len(w)
        assert s.makespan == w.total_burst


@settings(max_examples=200)
@given(workloads())
def test_rounds_preserve_initial_order(w):
    s = fjfdrr(w)
    initial = list(dict.fromkeys(seg.pid for seg in s.segments))
    # split segments into rounds using the per-round process count
    remaining = {p.pid: p.burst for p in w}
    i = 0
    for tq in s.quantum_history:
        alive = [pid for pid in initial if remaining[pid]]
        round_pids = [seg.pid for seg in s.segments[i : i + len(alive)]]
        assert round_pids == alive
        for seg in s.segments[i : i + len(alive)]:
            assert seg.length == min(tq, remaining[seg.pid])
            remaining[seg.pid] -= seg.length
        i += len(alive)
    assert i == len(s.segments)


@settings(max_examples=200)
@given(workloads())
def test_fjfdrr_round_bound(w):
    assert len(fjfdrr(w).quantum_history) <= math.ceil(math.log2(len(w))) + 1

