from fractions import Fraction

import pytest
from hypothesis import given

from fjfdrr.cases import builtin_case
from fjfdrr.core import Schedule, Segment
from fjfdrr.engine import fcfs, fjfdrr, pbsrr
from fjfdrr.metrics import ScheduleWorkloadMismatch, compute_metrics

from conftest import make_workload, workloads


def test_case5_fjfdrr_cs():
    w = builtin_case(5)
    s = fjfdrr(w)
    assert len(s.segments) == 15
    assert compute_metrics(s, w).context_switches == 14


def test_case3_pbsrr():
    w = builtin_case(3)
    m = compute_metrics(pbsrr(w, 15), w)
    assert m.avg_turnaround == Fraction(961, 5)
    assert m.avg_waiting == Fraction(669, 5)
    assert m.context_switches == 21


def test_case2_fjfdrr_waiting_follows_identity():
    w = builtin_case(2)
    m = compute_metrics(fjfdrr(w), w)
    assert m.avg_turnaround == 282
    assert m.avg_waiting == Fraction(1795, 8)


def test_single_segment():
    w = make_workload([9], [1])
    m = compute_metrics(Schedule("X", (Segment("P1", 0, 9),)), w)
    assert m.per_process["P1"].turnaround == 9
    assert m.per_process["P1"].waiting == 0
    assert m.context_switches == 0


def test_same_process_boundaries_count():
    # case 1 PBSRR ends with four back-to-back P5 slices; each boundary counts
    w = builtin_case(1)
    s = pbsrr(w, 15)
    assert [seg.pid for seg in s.segments][-5:] == ["P4"] + ["P5"] * 4
    assert compute_metrics(s, w).context_switches == 12


def test_mismatch_missing_pid():
    w = make_workload([3, 4], [1, 2])
    with pytest.raises(ScheduleWorkloadMismatch):
        compute_metrics(Schedule("X", (Segment("P1", 0, 3),)), w)


def test_mismatch_wrong_total():
    w = make_workload([3], [1])
    with pytest.raises(ScheduleWorkloadMismatch):
        compute_metrics(Schedule("X", (Segment("P1", 0, 2),)), w)


@given(workloads())
def test_tat_wt_identity(w):
    for s in (fjfdrr(w), pbsrr(w, 15), fcfs(w)):
        m = compute_metrics(s, w)
        assert m.avg_turnaround - m.avg_waiting == Fraction(w.total_burst, len(w))
        for p in w:
            pm = m.per_process[p.pid]
            assert pm.turnaround == pm.completion - p.arrival
            assert pm.waiting == pm.turnaround - p.burst >= 0
        assert m.context_switches == len(s.segments) - 1


@given(workloads())
def test_non_preemptive_cs_is_n_minus_one(w):
    assert compute_metrics(fcfs(w), w).context_switches == len(w) - 1
