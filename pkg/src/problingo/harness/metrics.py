"""RunRecords and aggregate metrics: average@k, pass@k, consistency@k."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping

from ..errors import DataError
from ..registry import LANGUAGES

LEDGER_SCHEMA_VERSION = 1


@dataclass(frozen=True)
class InstanceKey:
    task: str
    language: str
    dataset_seed: int
    index: int


@dataclass(frozen=True)
class RunRecord:
    """One model attempt on one instance, with its verified outcome."""

    key: InstanceKey
    attempt: int
    transcript: str
    correct: bool
    failure_reason: str | None
    latency_s: float
    model: str
    language_consistent: bool

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "schema_version": LEDGER_SCHEMA_VERSION,
            "task": self.key.task,
            "language": self.key.language,
            "dataset_seed": self.key.dataset_seed,
            "index": self.key.index,
            "attempt": self.attempt,
            "transcript": self.transcript,
            "correct": self.correct,
            "failure_reason": self.failure_reason,
            "latency_s": self.latency_s,
            "model": self.model,
            "language_consistent": self.language_consistent,
        }

    @classmethod
    def from_json_dict(cls, raw: Mapping[str, Any]) -> "RunRecord":
        try:
            return cls(
                key=InstanceKey(
                    raw["task"], raw["language"], int(raw["dataset_seed"]), int(raw["index"])
                ),
                attempt=int(raw["attempt"]),
                transcript=raw["transcript"],
                correct=bool(raw["correct"]),
                failure_reason=raw.get("failure_reason"),
                latency_s=float(raw.get("latency_s", 0.0)),
                model=raw.get("model", ""),
                language_consistent=bool(raw.get("language_consistent", False)),
            )
        except KeyError as exc:
            raise DataError(f"ledger record missing field {exc}") from None


@dataclass(frozen=True)
class CellMetrics:
    average_at_k: float
    pass_at_k: float
    consistency_at_k: float
    instances: int
    attempts: int


@dataclass
class EvalReport:
    k: int
    cells: dict[tuple[str, str], CellMetrics] = field(default_factory=dict)

    def tasks(self) -> list[str]:
        return sorted({task for task, _ in self.cells})

    def languages(self) -> list[str]:
        present = {lang for _, lang in self.cells}
        ordered = [lang for lang in LANGUAGES if lang in present]
        return ordered + sorted(present - set(LANGUAGES))

    def language_rollup(self, metric: str, language: str) -> float:
        values = [
            getattr(cell, metric)
            for (_, lang), cell in self.cells.items()
            if lang == language
        ]
        return sum(values) / len(values)

    def overall(self, metric: str) -> float:
        langs = self.languages()
        return sum(self.language_rollup(metric, lang) for lang in langs) / len(langs)

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "cells": [
                {
                    "task": task,
                    "language": lang,
                    "average_at_k": cell.average_at_k,
                    "pass_at_k": cell.pass_at_k,
                    "consistency_at_k": cell.consistency_at_k,
                    "instances": cell.instances,
                    "attempts": cell.attempts,
                }
                for (task, lang), cell in sorted(self.cells.items())
            ],
            "language_rollups": {
                lang: {
                    "average_at_k": self.language_rollup("average_at_k", lang),
                    "pass_at_k": self.language_rollup("pass_at_k", lang),
                    "consistency_at_k": self.language_rollup("consistency_at_k", lang),
                }
                for lang in self.languages()
            },
            "overall": {
                "average_at_k": self.overall("average_at_k"),
                "pass_at_k": self.overall("pass_at_k"),
                "consistency_at_k": self.overall("consistency_at_k"),
            },
        }


def compute_metrics(records: Iterable[RunRecord], k: int) -> EvalReport:
    """Aggregate records into per-(task, language) cells.

    Every instance must have exactly k attempts, one per attempt index.
    """
    if k < 1:
        raise DataError(f"k must be >= 1, got {k}")
    by_instance: dict[InstanceKey, dict[int, RunRecord]] = {}
    for record in records:
        slots = by_instance.setdefault(record.key, {})
        if record.attempt in slots:
            raise DataError(f"duplicate attempt {record.attempt} for {record.key}")
        slots[record.attempt] = record
    if not by_instance:
        raise DataError("no records to aggregate")
    for key, slots in by_instance.items():
        if sorted(slots) != list(range(k)):
            raise DataError(
                f"{key}: expected attempts 0..{k - 1}, got {sorted(slots)}"
            )

    grouped: dict[tuple[str, str], list[dict[int, RunRecord]]] = {}
    for key, slots in by_instance.items():
        grouped.setdefault((key.task, key.language), []).append(slots)

    report = EvalReport(k=k)
    for cell_key, instances in grouped.items():
        attempts = [rec for slots in instances for rec in slots.values()]
        average = sum(rec.correct for rec in attempts) / len(attempts)
        passed = sum(any(rec.correct for rec in slots.values()) for slots in instances)
        consistency = sum(rec.language_consistent for rec in attempts) / len(attempts)
        report.cells[cell_key] = CellMetrics(
            average_at_k=average,
            pass_at_k=passed / len(instances),
            consistency_at_k=consistency,
            instances=len(instances),
            attempts=len(attempts),
        )
    return report


def render_report(report: EvalReport, fmt: str = "text") -> str:
    """JSON (exact floats) or aligned text tables (3-decimal fractions)."""
    if fmt == "json":
        return json.dumps(report.to_json_dict(), ensure_ascii=False, indent=2, sort_keys=True)
    if fmt != "text":
        raise DataError(f"unknown report format {fmt!r}")
    if not report.cells:
        raise DataError("empty report")

    languages = report.languages()
    sections = []
    for metric, title in (
        ("average_at_k", f"Average@{report.k}"),
        ("pass_at_k", f"Pass@{report.k}"),
        ("consistency_at_k", f"LanguageConsistency@{report.k}"),
    ):
        header = ["task"] + languages + ["Average"]
        rows = [header]
        for task in report.tasks():
            row = [task]
            values = []
            for lang in languages:
                cell = report.cells.get((task, lang))
                if cell is None:
                    row.append("-")
                else:
                    value = getattr(cell, metric)
                    values.append(value)
                    row.append(f"{value:.3f}")
            row.append(f"{sum(values) / len(values):.3f}" if values else "-")
            rows.append(row)
        summary = ["all"]
        for lang in languages:
            summary.append(f"{report.language_rollup(metric, lang):.3f}")
        summary.append(f"{report.overall(metric):.3f}")
        rows.append(summary)

        widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
        lines = [title]
        for row in rows:
            lines.append("  ".join(cell.rjust(widths[i]) for i, cell in enumerate(row)))
        sections.append("\n".join(lines))
    return "\n\n".join(sections) + "\n"
