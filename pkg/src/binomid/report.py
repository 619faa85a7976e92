"""Sweep reports: aggregation across workers and text/JSON/CSV rendering."""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, NamedTuple, Sequence

from binomid import __version__

__all__ = [
    "Witness",
    "Failure",
    "VerificationReport",
    "merge_reports",
    "run_partitioned",
    "default_jobs",
    "render",
]


class Witness(NamedTuple):
    """Both sides of one identity instance."""

    lhs: Any
    rhs: Any
    holds: bool


@dataclass(frozen=True)
class Failure:
    params: tuple[tuple[str, Any], ...]
    lhs: str
    rhs: str

    @property
    def key(self) -> tuple:
        return tuple(v for _, v in self.params)

    def as_dict(self) -> dict:
        return {"parameters": dict(self.params), "lhs": self.lhs, "rhs": self.rhs}


def failure(params: dict[str, Any], lhs: Any, rhs: Any) -> Failure:
    return Failure(tuple(params.items()), str(lhs), str(rhs))


@dataclass
class VerificationReport:
    identity: str
    box: dict[str, Any]
    cases_checked: int = 0
    cases_skipped: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed_ms: float | None = None
    version: str = __version__
    notes: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, params: dict[str, Any], w: Witness) -> None:
        self.cases_checked += 1
        if not w.holds:
            self.failures.append(failure(params, w.lhs, w.rhs))

    def as_dict(self, timing: bool = True) -> dict[str, Any]:
        # key order is part of the output contract
        return {
            "identity": self.identity,
            "box": self.box,
            "cases_checked": self.cases_checked,
            "cases_skipped": self.cases_skipped,
            "failures": [f.as_dict() for f in self.failures],
            "elapsed_ms": round(self.elapsed_ms, 3) if timing and self.elapsed_ms is not None else None,
            "version": self.version,
            "notes": self.notes,
        }


def _merge_value(key: str, x: Any, y: Any) -> Any:
    if isinstance(x, dict):
        return _merge_notes(x, y)
    if x is None or y is None:
        return y if x is None else x
    if key.startswith("min_"):
        return min(x, y)
    if key.startswith("max_"):
        return max(x, y)
    return x + y


def _merge_notes(a: dict, b: dict) -> dict:
    """Combine partition notes: ``min_*``/``max_*`` keys by extremum, counts by sum."""
    out = dict(a)
    for k, v in b.items():
        out[k] = _merge_value(k, out[k], v) if k in out else v
    return out


def merge_reports(identity: str, box: dict, parts: Iterable[VerificationReport]) -> VerificationReport:
    """Combine partition reports; the result does not depend on partition order."""
    total = VerificationReport(identity, dict(box))
    for p in parts:
        total.cases_checked += p.cases_checked
        total.cases_skipped += p.cases_skipped
        total.failures.extend(p.failures)
        total.notes = _merge_notes(total.notes, p.notes)
    total.failures.sort(key=lambda f: f.key)
    total.notes = _sorted_notes(total.notes)
    return total


def _sorted_notes(d: dict) -> dict:
    return {k: _sorted_notes(v) if isinstance(v, dict) else v for k, v in sorted(d.items())}


def default_jobs() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)


def run_partitioned(
    identity: str,
    box: dict,
    worker: Callable[..., VerificationReport],
    partitions: Sequence[tuple],
    jobs: int = 1,
) -> VerificationReport:
    """Run ``worker(*partition)`` for every partition and merge the results."""
    start = time.perf_counter()
    if jobs <= 1 or len(partitions) <= 1:
        parts = [worker(*p) for p in partitions]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(worker, *zip(*partitions)))
    report = merge_reports(identity, box, parts)
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return report


def to_json(report: VerificationReport, timing: bool = False) -> str:
    return json.dumps(report.as_dict(timing=timing), indent=2) + "\n"


def to_csv(report: VerificationReport, timing: bool = False) -> str:
    """Failures as rows; report header fields go in leading ``#`` comment lines."""
    d = report.as_dict(timing=timing)
    buf = io.StringIO()
    for key in ("identity", "cases_checked", "cases_skipped", "elapsed_ms", "version"):
        buf.write(f"# {key}={'' if d[key] is None else d[key]}\n")
    buf.write(f"# box={json.dumps(d['box'])}\n")
    buf.write(f"# notes={json.dumps(d['notes'])}\n")
    names = [k for k, _ in report.failures[0].params] if report.failures else ["parameters"]
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([*names, "lhs", "rhs"])
    for f in report.failures:
        w.writerow([*(v for _, v in f.params), f.lhs, f.rhs])
    return buf.getvalue()


def from_csv(text: str) -> dict[str, Any]:
    """Parse :func:`to_csv` output back into the JSON-shaped dictionary."""
    header: dict[str, Any] = {}
    rows = []
    for line in text.splitlines():
        if line.startswith("# "):
            key, _, value = line[2:].partition("=")
            header[key] = value
        else:
            rows.append(line)
    reader = list(csv.reader(rows))
    names, body = reader[0][:-2], reader[1:]
    failures = []
    for row in body:
        params = {n: _parse_scalar(v) for n, v in zip(names, row[:-2])}
        failures.append({"parameters": params, "lhs": row[-2], "rhs": row[-1]})
    elapsed = header["elapsed_ms"]
    return {
        "identity": header["identity"],
        "box": json.loads(header["box"]),
        "cases_checked": int(header["cases_checked"]),
        "cases_skipped": int(header["cases_skipped"]),
        "failures": failures,
        "elapsed_ms": float(elapsed) if elapsed else None,
        "version": header["version"],
        "notes": json.loads(header["notes"]),
    }


def _parse_scalar(v: str) -> Any:
    try:
        return int(v)
    except ValueError:
        return v


def to_text(report: VerificationReport, timing: bool = True) -> str:
    lines = [
        f"identity: {report.identity}",
        "box: " + ", ".join(f"{k}={v}" for k, v in report.box.items()),
        f"cases checked: {report.cases_checked}  skipped: {report.cases_skipped}",
        f"failures: {len(report.failures)}",
    ]
    for f in report.failures[:50]:
        params = " ".join(f"{k}={v}" for k, v in f.params)
        lines.append(f"  FAIL {params}: lhs={f.lhs} rhs={f.rhs}")
    if len(report.failures) > 50:
        lines.append(f"  ... {len(report.failures) - 50} more")
    for k, v in report.notes.items():
        lines.append(f"note {k}: {json.dumps(v)}")
    if timing and report.elapsed_ms is not None:
        lines.append(f"elapsed: {report.elapsed_ms:.1f} ms")
    lines.append(f"version: {report.version}")
    lines.append("PASS" if report.ok else "FAIL")
    return "\n".join(lines) + "\n"


def render(report: VerificationReport, fmt: str = "text", timing: bool = False) -> str:
    if fmt == "json":
        return to_json(report, timing=timing)
    if fmt == "csv":
        return to_csv(report, timing=timing)
    return to_text(report, timing=True)
