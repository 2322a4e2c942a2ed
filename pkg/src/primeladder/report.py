"""Comparison tables across logics, rendered as Markdown, CSV or JSON."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import astuple, dataclass

from .strategies import RunResult

COLUMNS = (
    "id",
    "denominator_step",
    "numerator_step",
    "start_candidate",
    "initial_sum",
    "count_target",
    "modulo_ops",
    "prime_sum",
)
FORMATS = ("md", "csv", "json")


class MixedLimitsError(ValueError):
    pass


class ConsistencyError(RuntimeError):
    """Logics disagreed on the prime sum, which means one of them is wrong."""


@dataclass(frozen=True)
class Row:
    id: str
    denominator_step: int
    numerator_step: int
    start_candidate: int
    initial_sum: int
    count_target: int
    modulo_ops: int
    prime_sum: int


@dataclass(frozen=True)
class ComparisonTable:
    limit: int
    rows: tuple[Row, ...]


def build_table(results: list[RunResult]) -> ComparisonTable:
    if not results:
        raise ValueError("build_table needs at least one result")
    limits = {r.limit for r in results}
    if len(limits) > 1:
        raise MixedLimitsError(f"results span several limits: {sorted(limits)}")
    sums = {r.strategy_id.value: r.prime_sum for r in results}
    if len(set(sums.values())) > 1:
        raise ConsistencyError(f"prime sums disagree across logics: {sums}")
    rows = tuple(
        Row(
            r.spec.id.value,
            r.spec.denominator_step,
            r.spec.numerator_step,
            r.spec.start_candidate,
            r.spec.initial_sum,
            r.spec.count_target,
            r.ledger.modulo_ops,
            r.prime_sum,
        )
        for r in results
    )
    return ComparisonTable(limits.pop(), rows)


def to_markdown(table: ComparisonTable) -> str:
    lines = [
        "| " + " | ".join(COLUMNS) + " |",
        "|" + "|".join("---" if c == "id" else "---:" for c in COLUMNS) + "|",
    ]
    for row in table.rows:
        lines.append("| " + " | ".join(str(v) for v in astuple(row)) + " |")
    return "\n".join(lines) + "\n"


def to_csv(table: ComparisonTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    writer.writerows(astuple(row) for row in table.rows)
    return buf.getvalue()


def to_json(table: ComparisonTable) -> str:
    return json.dumps([dict(zip(COLUMNS, astuple(row))) for row in table.rows], indent=2) + "\n"


def render(table: ComparisonTable, format: str = "md") -> str:
    try:
        writer = {"md": to_markdown, "markdown": to_markdown, "csv": to_csv, "json": to_json}[
            format.lower()
        ]
    except KeyError:
        raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}") from None
    return writer(table)
