"""Command-line front end.

Usage:
    fjfdrr run --algo fjfdrr --workload case4.csv --format csv
    fjfdrr compare --algos fjfdrr,pbsrr --workload case1.csv
    fjfdrr paper [--case N]
    fjfdrr gen --n 8 --order random --seed 1

Exit codes: 0 success, 1 usage error, 2 parse/validation error,
3 verification mismatch or failed paper check.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import engine
from .cases import CASE_NUMBERS, UnknownCase, builtin_case, expected_for
from .core import Process, Schedule, SchedulingError, Workload, exact_decimal, render_decimal
from .fitfactor import Weights
from .io import (
    Report,
    dump_workload,
    emit_report,
    emit_reports,
    parse_workload,
    rational_dict,
    render_gantt,
)
from .oracle import tick_simulate
from .ordering import FitFactor, InputOrder, UserPriority
from .quantum import MedianDynamic, Static

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2, 3

ALGORITHMS = ("fjfdrr", "pbsrr", "rr", "fcfs", "sjf", "priority")
DEFAULT_QUANTUM = 15


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits 2 by default; usage is 1 here
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _write(data: bytes | str) -> None:
    if isinstance(data, str):
        data = data.encode()
    sys.stdout.buffer.write(data)
    sys.stdout.flush()


def load_workload(spec: str) -> tuple[Workload, str]:
    """Load a workload file, or a bundled case written as ``builtin:N``."""
    if spec.startswith("builtin:"):
        try:
            k = int(spec.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"bad builtin case {spec!r}")
        return builtin_case(k), f"case{k}"
    path = Path(spec)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read workload {spec!r}: {exc.strerror}")
    fmt = "json" if path.suffix.lower() == ".json" else "csv"
    return parse_workload(data, fmt), path.stem


def _scheduler(algo: str, quantum: int, weights: Weights) -> Callable[[Workload], Schedule]:
    return {
        "fjfdrr": lambda w: engine.fjfdrr(w, weights),
        "pbsrr": lambda w: engine.pbsrr(w, quantum),
        "rr": lambda w: engine.rr(w, quantum),
        "fcfs": engine.fcfs,
        "sjf": engine.sjf,
        "priority": engine.priority_np,
    }[algo]


def _oracle_schedule(algo: str, workload: Workload, quantum: int, weights: Weights) -> Schedule | None:
    if algo == "fjfdrr":
        return tick_simulate(workload, FitFactor(weights), MedianDynamic())
    if algo == "pbsrr":
        return tick_simulate(workload, UserPriority(), Static(quantum))
    if algo == "rr":
        return tick_simulate(workload, InputOrder(), Static(quantum))
    if any(p.arrival for p in workload):
        return None
    # with simultaneous arrival a non-preemptive run is one round with an unbounded slice
    label = {"fcfs": "FCFS", "sjf": "SJF", "priority": "PRIORITY"}[algo]
    big = Static(max(p.burst for p in workload))
    return tick_simulate(workload, engine.NON_PREEMPTIVE_ORDER[label], big)


def _parse_weights(text: str) -> Weights:
    try:
        return Weights.from_ratio(text)
    except SchedulingError as exc:
        raise UsageError(str(exc))


def _parse_quantum(value: int | None) -> int:
    q = DEFAULT_QUANTUM if value is None else value
    if q < 1:
        raise UsageError(f"--quantum must be >= 1, got {q}")
    return q


def cmd_run(args: argparse.Namespace) -> int:
    workload, name = load_workload(args.workload)
    quantum = _parse_quantum(args.quantum)
    weights = _parse_weights(args.weights)
    schedule = _scheduler(args.algo, quantum, weights)(workload)
    report = Report.build(schedule, workload, name)
    _write(emit_report(report, args.format))
    if args.gantt:
        _write(render_gantt(schedule, args.width) + "\n")
    if args.verify:
        reference = _oracle_schedule(args.algo, workload, quantum, weights)
        if reference is None:
            print("verify: skipped, oracle covers simultaneous arrival only", file=sys.stderr)
        elif reference.segments != schedule.segments:
            print("verify: MISMATCH between engine and oracle", file=sys.stderr)
            return EXIT_MISMATCH
        else:
            print("verify: engine matches oracle", file=sys.stderr)
    return EXIT_OK


def _delta_lines(reports: Sequence[Report], fmt: str) -> str | list[dict]:
    labels = [r.algorithm for r in reports]
    ref = labels.index("FJFDRR") if "FJFDRR" in labels else 0
    base = reports[ref]
    rows = []
    for i, r in enumerate(reports):
        if i == ref:
            continue
        rows.append(
            (
                f"{base.algorithm}-{r.algorithm}",
                base.avg_tat - r.avg_tat,
                base.avg_wt - r.avg_wt,
                base.context_switches - r.context_switches,
            )
        )
    if fmt == "json":
        return [
            {"delta": label, "avg_tat": rational_dict(dt), "avg_wt": rational_dict(dw), "cs": dc}
            for label, dt, dw, dc in rows
        ]
    if fmt == "csv":
        return "".join(
            f"delta:{label},{render_decimal(dt)},{render_decimal(dw)},{dc}\n"
            for label, dt, dw, dc in rows
        )
    return "".join(
        f"delta {label}: avg TAT {render_decimal(dt)}, avg WT {render_decimal(dw)}, CS {dc}\n"
        for label, dt, dw, dc in rows
    )


def cmd_compare(args: argparse.Namespace) -> int:
    algos = [a.strip().lower() for a in args.algos.split(",") if a.strip()]
    unknown = [a for a in algos if a not in ALGORITHMS]
    if not algos or unknown:
        raise UsageError(f"--algos must list algorithms from {','.join(ALGORITHMS)}")
    workload, name = load_workload(args.workload)
    quantum = _parse_quantum(args.quantum)
    weights = _parse_weights(args.weights)

    reports = [Report.build(_scheduler(a, quantum, weights)(workload), workload, name) for a in algos]
    deltas = _delta_lines(reports, args.format)
    if args.format == "json":
        doc = {"reports": [r.to_dict() for r in reports], "deltas": deltas}
        _write(json.dumps(doc, indent=2) + "\n")
    else:
        _write(emit_reports(reports, args.format))
        if args.format == "table":
            _write("\n")
        _write(deltas)
    return EXIT_OK


def _check(case: int, report: Report) -> tuple[bool, str]:
    exp = expected_for(case, report.algorithm)
    problems = []
    if report.quantum_history != exp.quantum_history:
        problems.append(f"quantum history {report.quantum_history} != {exp.quantum_history}")
    if report.avg_tat != exp.avg_tat:
        problems.append(f"avg TAT {exact_decimal(report.avg_tat)} != {exact_decimal(exp.avg_tat)}")
    if report.avg_wt != exp.avg_wt:
        problems.append(f"avg WT {exact_decimal(report.avg_wt)} != {exact_decimal(exp.avg_wt)}")
    if report.context_switches != exp.context_switches:
        problems.append(f"CS {report.context_switches} != {exp.context_switches}")
    summary = (
        f"avg TAT {exact_decimal(report.avg_tat)}, avg WT {exact_decimal(report.avg_wt)}, "
        f"CS {report.context_switches}, TQ {','.join(map(str, report.quantum_history))}"
    )
    status = "FAIL" if problems else "PASS"
    line = f"case {case} {exp.algorithm}: {status} ({summary})"
    if problems:
        line += "; " + "; ".join(problems)
    for note in exp.notes:
        line += f"\n  errata: {note}"
    return not problems, line


def cmd_paper(args: argparse.Namespace) -> int:
    if args.case is None:
        cases = CASE_NUMBERS
    else:
        if args.case not in CASE_NUMBERS:
            raise UnknownCase(args.case)
        cases = (args.case,)

    ok = True
    for k in cases:
        workload = builtin_case(k)
        reports = [
            Report.build(engine.fjfdrr(workload), workload, f"case{k}"),
            Report.build(engine.pbsrr(workload, DEFAULT_QUANTUM), workload, f"case{k}"),
        ]
        _write(emit_reports(reports, args.format))
        for r in reports:
            passed, line = _check(k, r)
            ok &= passed
            _write(line + "\n")
        _write("\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def generate_workload(n: int, order: str, max_burst: int, seed: int) -> Workload:
    if n < 1:
        raise UsageError("--n must be >= 1")
    if max_burst < 1:
        raise UsageError("--max-burst must be >= 1")
    rng = random.Random(seed)
    bursts = [rng.randint(1, max_burst) for _ in range(n)]
    if order == "increasing":
        bursts.sort()
    elif order == "decreasing":
        bursts.sort(reverse=True)
    priorities = rng.sample(range(1, n + 1), n)
    return Workload(
        tuple(Process(f"P{i}", 0, b, up) for i, (b, up) in enumerate(zip(bursts, priorities), 1))
    )


def cmd_gen(args: argparse.Namespace) -> int:
    workload = generate_workload(args.n, args.order, args.max_burst, args.seed)
    _write(dump_workload(workload, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fjfdrr", description="Fittest-job-first dynamic round robin simulator")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--workload", required=True, help="CSV/JSON workload file or builtin:N")
        p.add_argument("--quantum", type=int, default=None, help="static quantum for pbsrr/rr (default 15)")
        p.add_argument("--weights", default="3:2", help="UP:BT fit factor weights (default 3:2)")
        p.add_argument("--format", choices=("json", "csv", "table"), default="table")

    run = sub.add_parser("run", help="run one algorithm")
    run.add_argument("--algo", required=True, choices=ALGORITHMS)
    common(run)
    run.add_argument("--gantt", action="store_true", help="append a text Gantt chart")
    run.add_argument("--width", type=int, default=80, help="Gantt chart width")
    run.add_argument("--verify", action="store_true", help="cross-check against the tick oracle")
    run.set_defaults(func=cmd_run)

    cmp_ = sub.add_parser("compare", help="compare several algorithms on one workload")
    cmp_.add_argument("--algos", required=True, help="comma-separated list, e.g. fjfdrr,pbsrr")
    common(cmp_)
    cmp_.set_defaults(func=cmd_compare)

    paper = sub.add_parser("paper", help="reproduce the published cases")
    paper.add_argument("--case", type=int, default=None)
    paper.add_argument("--format", choices=("json", "csv", "table"), default="csv")
    paper.set_defaults(func=cmd_paper)

    gen = sub.add_parser("gen", help="generate a random workload")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--order", choices=("increasing", "decreasing", "random"), default="random")
    gen.add_argument("--max-burst", type=int, default=100)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--format", choices=("csv", "json"), default="csv")
    gen.set_defaults(func=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"fjfdrr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownCase as exc:
        print(f"fjfdrr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SchedulingError as exc:
        print(f"fjfdrr: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
