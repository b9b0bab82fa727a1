"""Strict parsing of backend text into task-matched structured answers.

Responses that deviate from the schema are reported as malformed, never
repaired: silent repair would hide schema drift from the strict acceptance
rule upstream.
"""

from __future__ import annotations

import re

from .types import (
    OracleAnswer,
    OracleTask,
    StepConfirmation,
    StepProposal,
    TranslationAnswer,
    VerificationAnswer,
)

_FOL_RE = re.compile(r"^FOL:\s*(\S.*)$")
_REFUSE_RE = re.compile(r"^REFUSE$")
_VERIFY_RE = re.compile(r"^VERDICT:\s*(verified|uncertain|rejected)\s*$")
_STEP_RE = re.compile(r"^STEP:\s*(supports|contradicts|refine)\s*$")
_STATEMENT_RE = re.compile(r"^STATEMENT:\s*(\S.*)$")
_CHECK_RE = re.compile(r"^VERDICT:\s*(valid|invalid)\s*$")


def _lines(raw: str) -> list[str]:
    return [line.strip() for line in raw.strip().splitlines() if line.strip()]


def parse_answer(task: OracleTask, raw: str) -> OracleAnswer | None:
    """Return the structured answer, or None when the text violates the schema."""
    lines = _lines(raw)
    if not lines:
        return None
    if task is OracleTask.TRANSLATE:
        if len(lines) != 1:
            return None
        if _REFUSE_RE.match(lines[0]):
            return TranslationAnswer(None)
        m = _FOL_RE.match(lines[0])
        return TranslationAnswer(m.group(1).strip()) if m else None
    if task is OracleTask.VERIFY_TRANSLATION:
        if len(lines) != 1:
            return None
        m = _VERIFY_RE.match(lines[0])
        return VerificationAnswer(m.group(1)) if m else None
    if task is OracleTask.REASON_STEP:
        m = _STEP_RE.match(lines[0])
        if m is None:
            return None
        relation = m.group(1)
        if relation == "refine":
            if len(lines) != 2:
                return None
            sm = _STATEMENT_RE.match(lines[1])
            return StepProposal("refine", sm.group(1).strip()) if sm else None
        return StepProposal(relation) if len(lines) == 1 else None
    if task is OracleTask.VERIFY_STEP:
        if len(lines) != 1:
            return None
        m = _CHECK_RE.match(lines[0])
        return StepConfirmation(m.group(1) == "valid") if m else None
    raise ValueError(f"unknown task: {task!r}")
