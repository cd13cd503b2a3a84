"""Report records and their json / csv / text renderings.

Every integer is written to json as a decimal string so arbitrarily large
values survive any json reader. Reports contain no timestamps and no
thread counts, so identical inputs give byte-identical output.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import __version__

SOURCES = ("literature", "derived", "trivial")


@dataclass
class Check:
    name: str
    claim: str
    source: str
    expected: Any
    computed: Any
    runtime: float | None = None

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def as_dict(self) -> dict[str, Any]:
        out = {
            "name": self.name,
            "claim": self.claim,
            "source": self.source,
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status,
        }
        if self.runtime is not None:
            out["runtime_s"] = f"{self.runtime:.3f}"
        return out


@dataclass
class Report:
    config: dict[str, Any]
    checks: list[Check] = field(default_factory=list)
    results: dict[str, Any] | None = None
    tables: list[tuple[str, list[str], list[list[str]]]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def as_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"tool_version": __version__, "config": self.config}
        if self.results is not None:
            out["results"] = self.results
        if self.checks or self.results is None:
            out["checks"] = [c.as_dict() for c in self.checks]
        out["status"] = self.status
        return out


def jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, float):
        return repr(obj)
    if isinstance(obj, dict):
        return {str(jsonable(k)): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [jsonable(v) for v in obj]
    return str(obj)


def _flat(value: Any) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return str(value)
    return json.dumps(jsonable(value), separators=(",", ":"))


def render_json(report: Report) -> str:
    return json.dumps(jsonable(report.as_dict()), indent=2) + "\n"


def render_csv(report: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if report.checks:
        w.writerow(["name", "source", "expected", "computed", "status"])
        for c in report.checks:
            w.writerow([c.name, c.source, _flat(c.expected), _flat(c.computed), c.status])
    if report.results is not None:
        w.writerow(["key", "value"])
        for k, v in report.results.items():
            w.writerow([k, _flat(v)])
    w.writerow(["status", report.status])
    return buf.getvalue()


def format_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
              for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for r in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


def render_text(report: Report) -> str:
    parts = [f"dihedralcovers {__version__}",
             "config: " + ", ".join(f"{k}={_flat(v)}" for k, v in report.config.items())]
    for title, headers, rows in report.tables:
        parts.append("")
        parts.append(title)
        parts.append(format_table(headers, rows))
    if report.results is not None:
        parts.append("")
        rows = [[k, _flat(v)] for k, v in report.results.items()]
        parts.append(format_table(["key", "value"], rows))
    if report.checks:
        parts.append("")
        rows = [[c.status.upper(), c.name, c.source, _flat(c.expected), _flat(c.computed)]
                for c in report.checks]
        parts.append(format_table(["status", "check", "source", "expected", "computed"], rows))
    parts.append("")
    parts.append(f"status: {report.status}")
    return "\n".join(parts) + "\n"


RENDERERS = {"json": render_json, "csv": render_csv, "text": render_text}
