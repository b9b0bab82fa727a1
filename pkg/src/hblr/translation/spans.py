"""Sentence spans and the hybrid statement/context types."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Literal as TypingLiteral, Union

from ..fol import Formula


Role = TypingLiteral["premise", "conclusion"]


@dataclass(frozen=True)
class SentenceSpan:
    text: str
    index: int
    role: Role = "premise"

    def __post_init__(self) -> None:
        if not self.text.strip():
            raise ValueError("sentence text is empty")
        if self.index < 0:
            raise ValueError("sentence index must be non-negative")


@dataclass(frozen=True)
class LogicStatement:
    """A sentence successfully translated into logic; the origin is kept for audit."""

    formula: Formula
    origin: SentenceSpan


@dataclass(frozen=True)
class TextStatement:
    """A sentence retained in natural language."""

    span: SentenceSpan


HybridStatement = Union[LogicStatement, TextStatement]


def statement_text(statement: HybridStatement) -> str:
    from ..fol import print_formula

    if isinstance(statement, LogicStatement):
        return print_formula(statement.formula)
    return statement.span.text


class TranslationMode(Enum):
    SELECTIVE = "selective"
    ALL_NL = "all-nl"
    ALL_FOL = "all-fol"

    @classmethod
    def parse(cls, label: str) -> "TranslationMode":
        for mode in cls:
            if mode.value == label:
                return mode
        raise ValueError(f"unknown translation mode: {label!r}")


@dataclass(frozen=True)
class HybridContext:
    """Premise statements plus the conclusion statement for one problem."""

    premises: tuple[HybridStatement, ...]
    conclusion: HybridStatement
    retention_ratio: float = field(default=-1.0)

    def __post_init__(self) -> None:
        if not self.premises:
            raise ValueError("premises must be non-empty")
        kept = sum(1 for p in self.premises if isinstance(p, TextStatement))
        expected = kept / len(self.premises)
        if self.retention_ratio < 0:
            object.__setattr__(self, "retention_ratio", expected)
        elif abs(self.retention_ratio - expected) > 1e-12:
            raise ValueError("retention_ratio does not match the premise statements")


@dataclass(frozen=True)
class FilterVerdict:
    accepted: bool
    matched_patterns: tuple[str, ...]
    rationale: str

    def __post_init__(self) -> None:
        if self.accepted and not self.matched_patterns:
            raise ValueError("an accepting verdict must name at least one pattern")


VerifierConfidence = TypingLiteral["verified", "uncertain", "rejected"]


@dataclass(frozen=True)
class VerifierVerdict:
    accepted: bool
    confidence: VerifierConfidence
    evidence: str

    def __post_init__(self) -> None:
        if self.accepted != (self.confidence == "verified"):
            raise ValueError("accepted must hold exactly when confidence is 'verified'")
