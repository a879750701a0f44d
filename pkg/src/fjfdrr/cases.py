"""The five published experiment workloads and their expected results.

Expected values are exact rationals produced by the unit-tick oracle. Where
the published table prints something different, the printed string is kept
next to it with a note explaining the disagreement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Process, SchedulingError, Workload, validate_workload


class UnknownCase(SchedulingError):
    def __init__(self, k: object) -> None:
        super().__init__(f"unknown case {k!r}; published cases are 1..5")
        self.k = k


# (bursts, user priorities) for P1..Pn, all arriving at t=0
_CASE_DATA: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {
    1: ((9, 15, 27, 43, 82), (5, 2, 4, 1, 3)),
    2: ((7, 20, 36, 53, 69, 82, 94, 100), (8, 1, 6, 3, 2, 5, 4, 7)),
    3: ((100, 88, 64, 37, 3), (5, 3, 1, 4, 2)),
    4: ((1, 35, 12, 9, 98), (5, 2, 4, 3, 1)),
    5: ((25, 99, 9, 32, 68, 75, 17, 2), (3, 6, 7, 1, 8, 5, 2, 4)),
}

CASE_NUMBERS = tuple(sorted(_CASE_DATA))


def builtin_case(k: int) -> Workload:
    if k not in _CASE_DATA:
        raise UnknownCase(k)
    bursts, prios = _CASE_DATA[k]
    return validate_workload(
        Process(f"P{i}", 0, b, up) for i, (b, up) in enumerate(zip(bursts, prios), 1)
    )


@dataclass(frozen=True)
class Expected:
    case: int
    algorithm: str
    quantum_history: tuple[int, ...]
    avg_tat: Fraction
    avg_wt: Fraction
    context_switches: int
    paper_avg_tat: str
    paper_avg_wt: str
    paper_cs: int
    notes: tuple[str, ...] = ()


_S15 = (15,)

MANIFEST: tuple[Expected, ...] = (
    Expected(1, "PBSRR", _S15 * 6, Fraction(102), Fraction(334, 5), 12, "102", "66.8", 12),
    Expected(
        1, "FJFDRR", (27, 35, 20), Fraction(441, 5), Fraction(53), 7, "88", "53", 7,
        ("avg TAT: paper prints 88; avg WT 53 + mean burst 176/5 forces 88.2",),
    ),
    Expected(
        2, "PBSRR", _S15 * 7, Fraction(1261, 4), Fraction(2061, 8), 34, "315.25", "257.62", 34,
        ("avg WT: paper prints 257.62 for 257.625 (rounding only)",),
    ),
    Expected(
        2, "FJFDRR", (61, 27, 9, 3), Fraction(282), Fraction(1795, 8), 14, "282", "189.5", 14,
        ("avg WT: paper prints 189.5; avg TAT 282 - mean burst 461/8 forces 224.375",),
    ),
    Expected(
        3, "PBSRR", _S15 * 7, Fraction(961, 5), Fraction(669, 5), 21, "192.19", "133.8", 21,
        ("avg TAT: paper prints 192.19 for 961/5 = 192.2",),
    ),
    Expected(3, "FJFDRR", (64, 30, 6), Fraction(722, 5), Fraction(86), 7, "144.4", "86", 7),
    Expected(4, "PBSRR", _S15 * 7, Fraction(399, 5), Fraction(244, 5), 12, "79.8", "48.8", 12),
    Expected(4, "FJFDRR", (12, 54, 32), Fraction(379, 5), Fraction(224, 5), 7, "75.8", "44.8", 7),
    Expected(5, "PBSRR", _S15 * 7, Fraction(183), Fraction(1137, 8), 25, "183", "142.13", 25),
    Expected(
        5, "FJFDRR", (28, 43, 16, 12), Fraction(1307, 8), Fraction(245, 2), 14,
        "164.5", "122.13", 14,
        ("avg TAT/WT: paper prints 164.5/122.13; TAT - WT must equal mean burst 327/8,"
         " oracle gives 163.375/122.5",),
    ),
)


def expected_for(case: int, algorithm: str) -> Expected:
    for e in MANIFEST:
        if e.case == case and e.algorithm == algorithm:
            return e
    raise KeyError((case, algorithm))
