"""Report emission: CSV for plotting, markdown mirroring the familiar
dataset-rows-by-method-columns layout. Output is byte-stable for fixed input."""

from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Sequence, Union

from .runner import (
    Aggregates,
    ComparisonReport,
    InstanceRecord,
    RunReport,
    aggregates_from_records,
)


class EmptyReportError(ValueError):
    pass


RECORD_COLUMNS = (
    "instance_id",
    "depth",
    "gold",
    "verdict",
    "predicted",
    "correct",
    "abstained",
    "steps_used",
    "essential_ratio",
    "retention_ratio",
    "error",
)


def _record_row(record: InstanceRecord) -> list[str]:
    return [
        record.instance_id,
        "" if record.depth is None else str(record.depth),
        record.gold,
        record.verdict,
        "" if record.predicted is None else record.predicted,
        "true" if record.correct else "false",
        "true" if record.abstained else "false",
        str(record.steps_used),
        repr(record.essential_ratio),
        repr(record.retention_ratio),
        record.error or "",
    ]


def run_report_csv(report: RunReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(RECORD_COLUMNS)
    for record in report.records:
        writer.writerow(_record_row(record))
    return buffer.getvalue()


def parse_records_csv(text: str) -> list[InstanceRecord]:
    """Inverse of run_report_csv; lets aggregates be recomputed from the file."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != RECORD_COLUMNS:
        raise ValueError("unexpected CSV header")
    records = []
    for row in reader:
        values = dict(zip(RECORD_COLUMNS, row))
        records.append(
            InstanceRecord(
                instance_id=values["instance_id"],
                depth=int(values["depth"]) if values["depth"] else None,
                gold=values["gold"],
                verdict=values["verdict"],
                predicted=values["predicted"] or None,
                correct=values["correct"] == "true",
                abstained=values["abstained"] == "true",
                steps_used=int(values["steps_used"]),
                essential_ratio=float(values["essential_ratio"]),
                retention_ratio=float(values["retention_ratio"]),
                error=values["error"] or None,
            )
        )
    return records


def _fmt(value: float) -> str:
    return f"{value:.4f}"


def _aggregate_lines(label: str, aggregates: Aggregates) -> list[str]:
    return [
        f"| {label} | {aggregates.instances} | {aggregates.correct} "
        f"| {_fmt(aggregates.accuracy)} | {_fmt(aggregates.mean_essential_ratio)} "
        f"| {_fmt(aggregates.mean_retention_ratio)} |"
    ]


def run_report_markdown(report: RunReport) -> str:
    lines = [
        "# Evaluation report",
        "",
        f"Configuration: `{report.config.label}`, budget {report.config.budget}, "
        f"backend `{report.config.backend}`, seed {report.config.seed}.",
        "",
        "| config | instances | correct | accuracy | essential ratio | retention ratio |",
        "| --- | --- | --- | --- | --- | --- |",
        *_aggregate_lines(report.config.label, report.aggregates),
        "",
        "## Accuracy by depth",
        "",
        "| depth | accuracy |",
        "| --- | --- |",
    ]
    for depth, accuracy in report.aggregates.per_depth_accuracy:
        lines.append(f"| {depth} | {_fmt(accuracy)} |")
    lines.append("")
    return "\n".join(lines)


def comparison_csv(report: ComparisonReport) -> str:
    depth_keys = sorted(
        {key for r in report.reports for key, _ in r.aggregates.per_depth_accuracy}
    )
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(
        [
            "config",
            "accuracy",
            "delta_accuracy",
            "mean_essential_ratio",
            "mean_retention_ratio",
            *[f"depth_{key}_accuracy" for key in depth_keys],
        ]
    )
    base_accuracy = report.reports[0].aggregates.accuracy
    for run in report.reports:
        per_depth = dict(run.aggregates.per_depth_accuracy)
        writer.writerow(
            [
                run.config.label,
                repr(run.aggregates.accuracy),
                repr(run.aggregates.accuracy - base_accuracy),
                repr(run.aggregates.mean_essential_ratio),
                repr(run.aggregates.mean_retention_ratio),
                *[repr(per_depth[key]) if key in per_depth else "" for key in depth_keys],
            ]
        )
    return buffer.getvalue()


def comparison_markdown(report: ComparisonReport) -> str:
    labels = report.labels
    lines = [
        "# Ablation comparison",
        "",
        f"Base configuration: `{report.base_label}`.",
        "",
        "| metric | " + " | ".join(labels) + " |",
        "| --- |" + " --- |" * len(labels),
    ]
    base_accuracy = report.reports[0].aggregates.accuracy

    def row(name: str, values: Sequence[str]) -> str:
        return f"| {name} | " + " | ".join(values) + " |"

    lines.append(
        row("accuracy", [_fmt(r.aggregates.accuracy) for r in report.reports])
    )
    lines.append(
        row(
            "delta vs base",
            [_fmt(r.aggregates.accuracy - base_accuracy) for r in report.reports],
        )
    )
    lines.append(
        row(
            "essential ratio",
            [_fmt(r.aggregates.mean_essential_ratio) for r in report.reports],
        )
    )
    lines.append(
        row(
            "retention ratio",
            [_fmt(r.aggregates.mean_retention_ratio) for r in report.reports],
        )
    )
    depth_keys = sorted(
        {key for r in report.reports for key, _ in r.aggregates.per_depth_accuracy}
    )
    if depth_keys:
        lines += ["", "## Accuracy by depth", ""]
        lines.append("| depth | " + " | ".join(labels) + " |")
        lines.append("| --- |" + " --- |" * len(labels))
        for key in depth_keys:
            cells = []
            for run in report.reports:
                per_depth = dict(run.aggregates.per_depth_accuracy)
                cells.append(_fmt(per_depth[key]) if key in per_depth else "-")
            lines.append(row(key, cells))
    lines.append("")
    return "\n".join(lines)


Report = Union[RunReport, ComparisonReport]


def emit_report(report: Report, fmt: str, path: str | Path | None = None) -> str:
    """Render a report as `csv` or `markdown`, optionally writing it to disk."""
    if isinstance(report, RunReport):
        if not report.records:
            raise EmptyReportError("run report has no records")
        text = run_report_csv(report) if fmt == "csv" else run_report_markdown(report)
    elif isinstance(report, ComparisonReport):
        if not report.reports:
            raise EmptyReportError("comparison report has no runs")
        text = comparison_csv(report) if fmt == "csv" else comparison_markdown(report)
    else:
        raise TypeError(f"not a report: {report!r}")
    if fmt not in ("csv", "markdown"):
        raise ValueError("format must be csv or markdown")
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def recompute_aggregates_from_csv(
    text: str, include_unknown_in_ratios: bool = False
) -> Aggregates:
    return aggregates_from_records(parse_records_csv(text), include_unknown_in_ratios)
