import random

import pytest
from hypothesis import strategies as st

from fjfdrr.core import Process, Workload, validate_workload

_criteria: dict[str, list[tuple[str, bool]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and rep.when == "call":
        _criteria.setdefault(marker.args[0], []).append((item.name, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: int(s.split(".")[0])):
        ok = all(passed for _, passed in _criteria[label])
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {label}")


def make_workload(bursts, priorities, arrivals=None) -> Workload:
    arrivals = arrivals or [0] * len(bursts)
    return validate_workload(
        Process(f"P{i}", a, b, up)
        for i, (a, b, up) in enumerate(zip(arrivals, bursts, priorities), 1)
    )


def random_workload(rng: random.Random, max_n: int = 12, max_burst: int = 100) -> Workload:
    """Workload with n in 1..max_n, bursts 1..max_burst, priorities 1..n (repeats allowed)."""
    n = rng.randint(1, max_n)
    bursts = [rng.randint(1, max_burst) for _ in range(n)]
    prios = [rng.randint(1, n) for _ in range(n)]
    return make_workload(bursts, prios)


@st.composite
def workloads(draw, max_n=12, max_burst=100):
    n = draw(st.integers(1, max_n))
    bursts = draw(st.lists(st.integers(1, max_burst), min_size=n, max_size=n))
    prios = draw(st.lists(st.integers(1, n), min_size=n, max_size=n))
    return make_workload(bursts, prios)
