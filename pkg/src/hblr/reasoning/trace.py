"""Proof traces: hypotheses, justified steps, verdicts, and trace export."""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional, Union

from ..fol import HornRule, Substitution
from ..translation import HybridStatement, statement_text


class Verdict(Enum):
    TRUE = "True"
    FALSE = "False"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Hypothesis:
    """One link in the hypothesis lineage; the root is the conclusion at depth 0."""

    statement: HybridStatement
    depth: int
    parent: Optional["Hypothesis"] = None

    def __post_init__(self) -> None:
        if self.parent is None and self.depth != 0:
            raise ValueError("root hypothesis must have depth 0")
        if self.parent is not None and self.depth != self.parent.depth + 1:
            raise ValueError("child depth must be parent depth + 1")


@dataclass(frozen=True)
class RuleApplication:
    rule: HornRule
    unifier: Substitution


@dataclass(frozen=True)
class PremiseMatch:
    premise_index: int


@dataclass(frozen=True)
class ContradictionWith:
    premise_index: int


@dataclass(frozen=True)
class OracleStep:
    prompt_digest: str
    response_digest: str


Justification = Union[RuleApplication, PremiseMatch, ContradictionWith, OracleStep]

_JUSTIFICATION_KINDS = {
    RuleApplication: "rule_application",
    PremiseMatch: "premise_match",
    ContradictionWith: "contradiction_with",
    OracleStep: "oracle_step",
}


def justification_kind(justification: Justification) -> str:
    return _JUSTIFICATION_KINDS[type(justification)]


@dataclass(frozen=True)
class ReasoningStep:
    from_hypothesis: Hypothesis
    derived: HybridStatement
    justification: Justification
    verified: bool


@dataclass(frozen=True)
class ProofTrace:
    steps: tuple[ReasoningStep, ...]
    verdict: Verdict
    steps_used: int
    budget: int
    strategy: str  # "backward" | "forward"
    essential_marks: Optional[tuple[bool, ...]] = None

    def __post_init__(self) -> None:
        if self.steps_used > self.budget:
            raise ValueError("steps_used exceeds the budget")
        if self.essential_marks is not None and len(self.essential_marks) != len(self.steps):
            raise ValueError("one essential mark per step required")

    @property
    def essential_ratio(self) -> Optional[float]:
        """Fraction of steps on the dependency path to the verdict.

        Unknown verdicts have no verdict-producing step, so the ratio is 0.0;
        a decided trace with no steps has nothing extraneous, so it is 1.0.
        """
        if self.verdict is Verdict.UNKNOWN:
            return 0.0
        if self.essential_marks is None:
            return None
        if not self.steps:
            return 1.0
        return sum(self.essential_marks) / len(self.steps)

    def with_marks(self, marks: tuple[bool, ...]) -> "ProofTrace":
        return replace(self, essential_marks=marks)


def export_trace(trace: ProofTrace) -> str:
    """Line-delimited TSV, one step per line, fixed field order:
    step_index, hypothesis, derived, justification_kind, verified, essential."""
    lines = []
    for i, step in enumerate(trace.steps):
        essential = ""
        if trace.essential_marks is not None:
            essential = "true" if trace.essential_marks[i] else "false"
        lines.append(
            "\t".join(
                (
                    str(i),
                    statement_text(step.from_hypothesis.statement),
                    statement_text(step.derived),
                    justification_kind(step.justification),
                    "true" if step.verified else "false",
                    essential,
                )
            )
        )
    return "\n".join(lines)
