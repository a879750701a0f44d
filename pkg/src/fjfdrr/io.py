"""Workload parsing, report serialization and text Gantt charts."""

from __future__ import annotations

import csv
import io as _io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cases import UnknownCase, builtin_case  # noqa: F401  (re-exported)
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
from .metrics import compute_metrics

CSV_HEADER = ("pid", "arrival", "burst", "priority")
FORMATS = ("csv", "json")


class ParseError(SchedulingError):
    def __init__(self, message: str, line: int | None = None) -> None:
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


def _to_int(value: object, field: str, line: int | None) -> int:
    if isinstance(value, bool):
        raise ParseError(f"{field} must be an integer, got {value!r}", line)
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            pass
    raise ParseError(f"{field} must be an integer, got {value!r}", line)


def _parse_csv(text: str) -> list[Process]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("missing header", 1)
    header = tuple(h.strip() for h in lines[0].rstrip("\r").split(","))
    if header != CSV_HEADER:
        raise ParseError(f"expected header {','.join(CSV_HEADER)!r}", 1)
    procs = []
    for lineno, raw in enumerate(lines[1:], start=2):
        row = raw.rstrip("\r")
        if not row.strip():
            continue
        cells = row.split(",")
        if len(cells) != 4:
            raise ParseError(f"expected 4 fields, got {len(cells)}", lineno)
        pid = cells[0].strip()
        if not pid:
            raise ParseError("empty pid", lineno)
        procs.append(
            Process(
                pid,
                _to_int(cells[1], "arrival", lineno),
                _to_int(cells[2], "burst", lineno),
                _to_int(cells[3], "priority", lineno),
            )
        )
    return procs


def _parse_json(text: str) -> list[Process]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at position {exc.pos}: {exc.msg}") from exc
    if not isinstance(data, list):
        raise ParseError("expected a JSON array of process objects")
    procs = []
    for i, item in enumerate(data):
        if not isinstance(item, dict) or set(item) != set(CSV_HEADER):
            raise ParseError(f"element {i}: expected keys {list(CSV_HEADER)}")
        pid = item["pid"]
        if not isinstance(pid, str) or not pid:
            raise ParseError(f"element {i}: pid must be a non-empty string")
        procs.append(
            Process(
                pid,
                _to_int(item["arrival"], "arrival", None),
                _to_int(item["burst"], "burst", None),
                _to_int(item["priority"], "priority", None),
            )
        )
    return procs


def parse_workload(data: bytes | str, fmt: str = "csv") -> Workload:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    if fmt == "csv":
        procs = _parse_csv(text)
    elif fmt == "json":
        procs = _parse_json(text)
    else:
        raise ValueError(f"unknown workload format {fmt!r}")
    return validate_workload(procs)


def dump_workload(workload: Workload, fmt: str = "csv") -> bytes:
    if fmt == "csv":
        rows = [",".join(CSV_HEADER)]
        rows += [f"{p.pid},{p.arrival},{p.burst},{p.user_priority}" for p in workload]
        return ("\n".join(rows) + "\n").encode()
    if fmt == "json":
        items = [
            {"pid": p.pid, "arrival": p.arrival, "burst": p.burst, "priority": p.user_priority}
            for p in workload
        ]
        return (json.dumps(items, indent=2) + "\n").encode()
    raise ValueError(f"unknown workload format {fmt!r}")


def render_gantt(schedule: Schedule, width: int = 80) -> str:
    """Single-line ASCII Gantt chart with tick labels on a second line.

    Every segment opens with ``|`` and gets at least one column; columns are
    otherwise proportional to duration. When ``width`` cannot give each
    segment a column, labels are dropped and each segment is a bare ``|``.
    """
    segs = schedule.segments
    if not segs:
        return "|"
    budget = width - 1  # closing bar
    if budget < len(segs):
        return "|" * (len(segs) + 1)

    span = segs[-1].end - segs[0].start
    cols = [max(1, seg.length * budget // span) for seg in segs]
    while sum(cols) > budget:
        widest = max(range(len(cols)), key=lambda i: cols[i])
        cols[widest] -= 1

    chart = []
    for seg, c in zip(segs, cols):
        body = seg.pid[: c - 1]
        chart.append("|" + body + "." * (c - 1 - len(body)))
    chart.append("|")

    labels = [" "] * (sum(cols) + 1)
    positions = [0]
    for c in cols:
        positions.append(positions[-1] + c)
    ticks = [segs[0].start] + [seg.end for seg in segs]

    last = str(ticks[-1])
    last_at = max(0, positions[-1] - len(last) + 1)
    free_from = 0
    for pos, tick in zip(positions[:-1], ticks[:-1]):
        text = str(tick)
        if pos < free_from or pos + len(text) >= last_at:
            continue
        labels[pos : pos + len(text)] = text
        free_from = pos + len(text) + 1
    labels[last_at:] = last
    return "".join(chart) + "\n" + "".join(labels).rstrip()


@dataclass(frozen=True)
class Report:
    algorithm: str
    workload_name: str
    quantum_history: tuple[int, ...]
    segments: tuple[Segment, ...]
    per_process: dict[str, ProcessMetrics]
    avg_tat: Fraction
    avg_wt: Fraction
    context_switches: int

    @classmethod
    def build(cls, schedule: Schedule, workload: Workload, workload_name: str = "") -> "Report":
        m: Metrics = compute_metrics(schedule, workload)
        return cls(
            schedule.algorithm,
            workload_name,
            schedule.quantum_history,
            schedule.segments,
            m.per_process,
            m.avg_turnaround,
            m.avg_waiting,
            m.context_switches,
        )

    def to_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "workload": self.workload_name,
            "quantum_history": list(self.quantum_history),
            "segments": [{"pid": s.pid, "start": s.start, "end": s.end} for s in self.segments],
            "per_process": {
                pid: {"completion": m.completion, "tat": m.turnaround, "wt": m.waiting}
                for pid, m in self.per_process.items()
            },
            "avg_tat": rational_dict(self.avg_tat),
            "avg_wt": rational_dict(self.avg_wt),
            "context_switches": self.context_switches,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(
            d["algorithm"],
            d["workload"],
            tuple(d["quantum_history"]),
            tuple(Segment(s["pid"], s["start"], s["end"]) for s in d["segments"]),
            {
                pid: ProcessMetrics(m["completion"], m["tat"], m["wt"])
                for pid, m in d["per_process"].items()
            },
            Fraction(d["avg_tat"]["num"], d["avg_tat"]["den"]),
            Fraction(d["avg_wt"]["num"], d["avg_wt"]["den"]),
            d["context_switches"],
        )


def rational_dict(value: Fraction) -> dict:
    return {"num": value.numerator, "den": value.denominator, "rendered": render_decimal(value)}


REPORT_CSV_HEADER = "algorithm,avg_tat,avg_wt,cs"


def csv_row(report: Report) -> str:
    return (
        f"{report.algorithm},{render_decimal(report.avg_tat)},"
        f"{render_decimal(report.avg_wt)},{report.context_switches}"
    )


def _table(report: Report) -> str:
    out = _io.StringIO()
    title = report.algorithm + (f" on {report.workload_name}" if report.workload_name else "")
    out.write(title + "\n")
    if report.quantum_history:
        out.write("time quantum: " + ",".join(map(str, report.quantum_history)) + "\n")
    pid_w = max(3, *(len(pid) for pid in report.per_process))
    out.write(f"{'pid':<{pid_w}}  {'completion':>10}  {'tat':>6}  {'wt':>6}\n")
    for pid, m in report.per_process.items():
        out.write(f"{pid:<{pid_w}}  {m.completion:>10}  {m.turnaround:>6}  {m.waiting:>6}\n")
    out.write(f"avg TAT {render_decimal(report.avg_tat)}\n")
    out.write(f"avg WT  {render_decimal(report.avg_wt)}\n")
    out.write(f"CS      {report.context_switches}\n")
    return out.getvalue()


def emit_report(report: Report, fmt: str = "table") -> bytes:
    if fmt == "json":
        return (json.dumps(report.to_dict(), indent=2) + "\n").encode()
    if fmt == "csv":
        return (REPORT_CSV_HEADER + "\n" + csv_row(report) + "\n").encode()
    if fmt == "table":
        return _table(report).encode()
    raise ValueError(f"unknown report format {fmt!r}")


def emit_reports(reports: Sequence[Report], fmt: str = "table") -> bytes:
    """Several reports in one document (one JSON array, one CSV header)."""
    if fmt == "json":
        return (json.dumps([r.to_dict() for r in reports], indent=2) + "\n").encode()
    if fmt == "csv":
        buf = _io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(REPORT_CSV_HEADER.split(","))
        for r in reports:
            writer.writerow(csv_row(r).split(","))
        return buf.getvalue().encode()
    return "\n".join(_table(r) for r in reports).encode()
