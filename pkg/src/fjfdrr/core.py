"""Domain types shared by every scheduler in the package.

Times are integer ticks. Averages and fit factors are exact
:class:`fractions.Fraction` values and only become decimal strings at
render time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import Iterable, Iterator


class SchedulingError(ValueError):
    """Base class for every error raised by this package."""


class EmptyWorkload(SchedulingError):
    def __init__(self) -> None:
        super().__init__("workload contains no processes")


class DuplicateId(SchedulingError):
    def __init__(self, pid: str) -> None:
        super().__init__(f"duplicate process id {pid!r}")
        self.pid = pid


class NonPositiveBurst(SchedulingError):
    def __init__(self, pid: str) -> None:
        super().__init__(f"process {pid!r}: burst must be >= 1")
        self.pid = pid


class NonPositivePriority(SchedulingError):
    def __init__(self, pid: str) -> None:
        super().__init__(f"process {pid!r}: user priority must be >= 1")
        self.pid = pid


class NegativeArrival(SchedulingError):
    def __init__(self, pid: str) -> None:
        super().__init__(f"process {pid!r}: arrival must be >= 0")
        self.pid = pid


class NonzeroArrival(SchedulingError):
    def __init__(self, pid: str) -> None:
        super().__init__(
            f"process {pid!r} arrives after t=0; round-based algorithms "
            "require every process to arrive at t=0"
        )
        self.pid = pid


@dataclass(frozen=True)
class Process:
    pid: str
    arrival: int
    burst: int
    user_priority: int  # 1 is the most important


@dataclass(frozen=True)
class Workload:
    """Validated, ordered set of processes. Input order is a tie-break key."""

    processes: tuple[Process, ...]

    def __iter__(self) -> Iterator[Process]:
        return iter(self.processes)

    def __len__(self) -> int:
        return len(self.processes)

    def __getitem__(self, pid: str) -> Process:
        for p in self.processes:
            if p.pid == pid:
                return p
        raise KeyError(pid)

    @property
    def total_burst(self) -> int:
        return sum(p.burst for p in self.processes)

    def require_simultaneous_arrival(self) -> None:
        for p in self.processes:
            if p.arrival != 0:
                raise NonzeroArrival(p.pid)


@dataclass(frozen=True)
class Segment:
    pid: str
    start: int
    end: int

    def __post_init__(self) -> None:
        if self.start >= self.end:
            raise ValueError(f"empty segment {self.pid}[{self.start},{self.end})")

    @property
    def length(self) -> int:
        return self.end - self.start


@dataclass(frozen=True)
class Schedule:
    algorithm: str
    segments: tuple[Segment, ...]
    quantum_history: tuple[int, ...] = ()

    @property
    def makespan(self) -> int:
        return self.segments[-1].end if self.segments else 0

    def executed(self) -> dict[str, int]:
        """Total executed ticks per pid, in first-appearance order."""
        out: dict[str, int] = {}
        for seg in self.segments:
            out[seg.pid] = out.get(seg.pid, 0) + seg.length
        return out


@dataclass(frozen=True)
class ProcessMetrics:
    completion: int
    turnaround: int
    waiting: int


@dataclass(frozen=True)
class Metrics:
    per_process: dict[str, ProcessMetrics] = field(hash=False)
    avg_turnaround: Fraction
    avg_waiting: Fraction
    context_switches: int


def validate_workload(raw: Iterable[Process]) -> Workload:
    """Check every process invariant and return an immutable Workload.

    Raises the first violation found, scanning rows in input order.
    """
    procs = tuple(raw)
    if not procs:
        raise EmptyWorkload()
    seen: set[str] = set()
    for p in procs:
        if p.pid in seen:
            raise DuplicateId(p.pid)
        seen.add(p.pid)
        if p.arrival < 0:
            raise NegativeArrival(p.pid)
        if p.burst < 1:
            raise NonPositiveBurst(p.pid)
        if p.user_priority < 1:
            raise NonPositivePriority(p.pid)
    return Workload(procs)


def render_decimal(value: Fraction, places: int = 2) -> str:
    """Round half away from zero to ``places`` decimals, dropping trailing zeros.

    >>> render_decimal(Fraction(441, 5))
    '88.2'
    >>> render_decimal(Fraction(2061, 8))
    '257.63'
    >>> render_decimal(Fraction(53))
    '53'
    """
    exact = Decimal(value.numerator) / Decimal(value.denominator)
    # Decimal division above is to 28 significant digits, plenty for ticks.
    q = exact.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP)
    text = format(q, "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return "0" if text == "-0" else text


def exact_decimal(value: Fraction) -> str:
    """Exact decimal string when the expansion terminates, else ``num/den``."""
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{value.numerator}/{value.denominator}"
    return render_decimal(value, places=max(twos, fives))
