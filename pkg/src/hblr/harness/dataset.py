"""Problem instances and JSONL dataset ingestion.

Schema per line: `id, premises (array of strings), conclusion (string),
options (optional array of {label,text}), gold (string), depth (optional
integer)`. Malformed lines abort the load with their line numbers; nothing is
skipped silently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

ENTAILMENT_LABELS = ("True", "False", "Unknown")


class SchemaError(Exception):
    def __init__(self, line: int, field: str, detail: str = ""):
        message = f"line {line}: bad field {field!r}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)
        self.line = line
        self.field = field


@dataclass(frozen=True)
class ChoiceOption:
    label: str
    text: str


@dataclass(frozen=True)
class ProblemInstance:
    id: str
    premises: tuple[str, ...]
    conclusion: str
    gold: str
    options: Optional[tuple[ChoiceOption, ...]] = None
    depth: Optional[int] = None

    def __post_init__(self) -> None:
        if not self.premises:
            raise ValueError("instance needs at least one premise")
        if self.options is None:
            if self.gold not in ENTAILMENT_LABELS:
                raise ValueError(f"gold {self.gold!r} not in {ENTAILMENT_LABELS}")
        else:
            labels = {o.label for o in self.options}
            if self.gold not in labels:
                raise ValueError(f"gold {self.gold!r} not among option labels")

    @property
    def label_space(self) -> tuple[str, ...]:
        if self.options is None:
            return ENTAILMENT_LABELS
        return tuple(o.label for o in self.options)

    def to_json(self) -> str:
        record: dict = {
            "id": self.id,
            "premises": list(self.premises),
            "conclusion": self.conclusion,
            "gold": self.gold,
        }
        if self.options is not None:
            record["options"] = [{"label": o.label, "text": o.text} for o in self.options]
        if self.depth is not None:
            record["depth"] = self.depth
        return json.dumps(record, sort_keys=True)


def _parse_line(line_no: int, payload: dict) -> ProblemInstance:
    def need(field: str, kind) -> object:
        if field not in payload:
            raise SchemaError(line_no, field, "missing")
        value = payload[field]
        if not isinstance(value, kind):
            raise SchemaError(line_no, field, f"expected {kind.__name__}")
        return value

    identifier = need("id", str)
    premises = need("premises", list)
    if not premises or not all(isinstance(p, str) and p.strip() for p in premises):
        raise SchemaError(line_no, "premises", "must be non-empty strings")
    conclusion = need("conclusion", str)
    gold = need("gold", str)
    options = None
    if payload.get("options") is not None:
        raw_options = need("options", list)
        parsed = []
        for entry in raw_options:
            if (
                not isinstance(entry, dict)
                or not isinstance(entry.get("label"), str)
                or not isinstance(entry.get("text"), str)
            ):
                raise SchemaError(line_no, "options", "each needs label and text")
            parsed.append(ChoiceOption(entry["label"], entry["text"]))
        options = tuple(parsed)
    depth = payload.get("depth")
    if depth is not None and not isinstance(depth, int):
        raise SchemaError(line_no, "depth", "expected integer")
    try:
        return ProblemInstance(
            id=identifier,
            premises=tuple(premises),
            conclusion=conclusion,
            gold=gold,
            options=options,
            depth=depth,
        )
    except ValueError as exc:
        raise SchemaError(line_no, "gold", str(exc)) from exc


def load_dataset(path: str | Path) -> list[ProblemInstance]:
    """Load a JSONL dataset, aborting on the first batch of malformed lines."""
    text = Path(path).read_text(encoding="utf-8")
    instances: list[ProblemInstance] = []
    errors: list[SchemaError] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            payload = json.loads(line)
        except json.JSONDecodeError as exc:
            errors.append(SchemaError(line_no, "json", str(exc)))
            continue
        if not isinstance(payload, dict):
            errors.append(SchemaError(line_no, "json", "expected an object"))
            continue
        try:
            instances.append(_parse_line(line_no, payload))
        except SchemaError as exc:
            errors.append(exc)
    if errors:
        first = errors[0]
        summary = "; ".join(str(e) for e in errors)
        raise SchemaError(first.line, first.field, f"aborting: {summary}")
    return instances


def save_dataset(instances: list[ProblemInstance], path: str | Path) -> None:
    Path(path).write_text(
        "".join(inst.to_json() + "\n" for inst in instances), encoding="utf-8"
    )
