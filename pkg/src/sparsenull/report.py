"""CSV run reports.

Every command that solves something writes a header row followed by one
:class:`RunReport` row, in the fixed column order of :data:`COLUMNS`.
Rationals are rendered as ``p/q`` (or ``p`` when q = 1), vectors as
space-separated rationals, booleans as ``true``/``false``.  Empty cells mean
"not known" or "not applicable".
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Iterable, Optional

COLUMNS = ("instance", "problem", "oracle", "objective", "optimum", "ratio",
           "wall_time", "certificate", "verified", "solution", "error")

TRACE_COLUMNS = ("iteration", "l0", "replaced_index", "column")

CERTIFY_COLUMNS = ("check", "instance", "verdict", "witness")


def cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (tuple, list)):
        return " ".join(cell(v) for v in value)
    return str(value)


@dataclass
class RunReport:
    instance: str
    problem: str
    oracle: str
    objective: Optional[int] = None
    optimum: Optional[int] = None
    wall_time: Optional[str] = None
    certificate: Optional[str] = None
    verified: Optional[bool] = None
    solution: Optional[tuple] = None
    error: Optional[str] = None

    @property
    def ratio(self) -> Optional[Fraction]:
        if self.objective is None or self.optimum is None:
            return None
        if self.optimum == 0:
            # the only feasible objective against an optimum of 0 is 0
            return Fraction(1) if self.objective == 0 else None
        return Fraction(self.objective, self.optimum)

    def row(self) -> list[str]:
        values = {f.name: getattr(self, f.name) for f in fields(self)}
        values["ratio"] = self.ratio
        return [cell(values[c]) for c in COLUMNS]


def summary_rows(reports: Iterable[RunReport]) -> list[list[str]]:
    """Per-oracle ``summary:max`` and ``summary:mean`` rows over known ratios."""
    by_oracle: dict[str, list[Fraction]] = {}
    for r in reports:
        by_oracle.setdefault(r.oracle, [])
        if r.ratio is not None:
            by_oracle[r.oracle].append(r.ratio)
    rows = []
    for oracle in sorted(by_oracle):
        ratios = by_oracle[oracle]
        for label, value in (("max", max(ratios) if ratios else None),
                             ("mean", sum(ratios) / len(ratios) if ratios else None)):
            row = dict.fromkeys(COLUMNS, "")
            row.update(instance=f"summary:{label}", oracle=oracle, ratio=cell(value))
            rows.append([row[c] for c in COLUMNS])
    return rows


def to_csv(header: Iterable[str], rows: Iterable[Iterable[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def report_csv(reports: Iterable[RunReport], summary: bool = False) -> str:
    reports = list(reports)
    rows = [r.row() for r in reports]
    if summary and reports:
        rows += summary_rows(reports)
    return to_csv(COLUMNS, rows)


def trace_csv(trace) -> str:
    return to_csv(TRACE_COLUMNS, ([cell(s.iteration), cell(s.l0), cell(s.replaced_index),
                                   cell(s.column)] for s in trace.steps))
