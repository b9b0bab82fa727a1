"""Request/response carriers for the natural-language reasoning backend."""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Optional, Union


class OracleTask(str, Enum):
    TRANSLATE = "translate"
    VERIFY_TRANSLATION = "verify_translation"
    REASON_STEP = "reason_step"
    VERIFY_STEP = "verify_step"


REQUIRED_FIELDS: dict[OracleTask, tuple[str, ...]] = {
    OracleTask.TRANSLATE: ("sentence",),
    OracleTask.VERIFY_TRANSLATION: ("sentence", "formula"),
    OracleTask.REASON_STEP: ("premises", "hypothesis"),
    OracleTask.VERIFY_STEP: ("premises", "hypothesis", "derived"),
}


class TransportError(Exception):
    """Backend unreachable or returned an unusable transport-level reply."""


class UnconfiguredError(Exception):
    """Backend is missing an endpoint, credential, or script table."""


_WS_RE = re.compile(r"\s+")


def _collapse(value: str) -> str:
    return _WS_RE.sub(" ", value).strip()


@dataclass(frozen=True)
class OracleRequest:
    task: OracleTask
    payload: Mapping[str, str]
    prompt_version: str = "v1"

    def __post_init__(self) -> None:
        missing = [f for f in REQUIRED_FIELDS[self.task] if f not in self.payload]
        if missing:
            raise ValueError(f"{self.task.value} request missing fields: {missing}")

    def normalized_payload(self) -> dict[str, str]:
        return {k: _collapse(str(v)) for k, v in sorted(self.payload.items())}


def cache_key(request: OracleRequest) -> str:
    """Digest of (task, prompt version, whitespace-normalized payload)."""
    material = json.dumps(
        {
            "task": request.task.value,
            "prompt_version": request.prompt_version,
            "payload": request.normalized_payload(),
        },
        sort_keys=True,
        ensure_ascii=True,
    )
    return hashlib.sha256(material.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class TranslationAnswer:
    formula_text: Optional[str]  # None means a clean refusal

    @property
    def refused(self) -> bool:
        return self.formula_text is None


@dataclass(frozen=True)
class VerificationAnswer:
    label: str  # verified | uncertain | rejected


@dataclass(frozen=True)
class StepProposal:
    relation: str  # supports | contradicts | refine
    statement: Optional[str] = None  # required when relation == refine


@dataclass(frozen=True)
class StepConfirmation:
    valid: bool


OracleAnswer = Union[TranslationAnswer, VerificationAnswer, StepProposal, StepConfirmation]


@dataclass(frozen=True)
class OracleResponse:
    task: OracleTask
    answer: Optional[OracleAnswer]
    raw: str
    latency_ms: float
    cached: bool = False
    malformed: bool = field(default=False)

    def __post_init__(self) -> None:
        if (self.answer is None) != self.malformed:
            raise ValueError("a response is malformed exactly when it has no answer")
