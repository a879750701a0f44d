"""Fittest Job First Dynamic Round Robin scheduling simulator."""

from .core import (
    Metrics,
    Process,
    ProcessMetrics,
    Schedule,
    SchedulingError,
    Segment,
    Workload,
    render_decimal,
    validate_workload,
)
from .engine import fcfs, fjfdrr, pbsrr, priority_np, rr, run_round_based, sjf
from .fitfactor import Weights, assign_sp_ranks, fit_factor, fjfdrr_order
from .metrics import compute_metrics
from .oracle import tick_simulate
from .ordering import FitFactor, InputOrder, ShortestBurst, UserPriority
from .quantum import MedianDynamic, Static, median_quantum, next_quantum

__version__ = "0.1.0"
