"""Hypothesis-driven backward reasoning, a forward-chaining baseline, step
verification, and essential-step marking."""

from .backward import MalformedContextError, backward_prove
from .essential import mark_essential
from .forward import forward_prove
from .kb import SymbolicKB, compile_context, conclusion_literal, render_premises
from .trace import (
    ContradictionWith,
    Hypothesis,
    Justification,
    OracleStep,
    PremiseMatch,
    ProofTrace,
    ReasoningStep,
    RuleApplication,
    Verdict,
    export_trace,
    justification_kind,
)
from .verify import verify_step

__all__ = [
    "ContradictionWith",
    "Hypothesis",
    "Justification",
    "MalformedContextError",
    "OracleStep",
    "PremiseMatch",
    "ProofTrace",
    "ReasoningStep",
    "RuleApplication",
    "SymbolicKB",
    "Verdict",
    "backward_prove",
    "compile_context",
    "conclusion_literal",
    "export_trace",
    "forward_prove",
    "justification_kind",
    "mark_essential",
    "render_premises",
    "verify_step",
]
