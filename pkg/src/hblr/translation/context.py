"""Hybrid context assembly: filter, translate, verify, revert."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol, Sequence

from ..fol import Formula
from .patterns import FilterPattern, structural_filter
from .spans import (
    HybridContext,
    HybridStatement,
    LogicStatement,
    SentenceSpan,
    TextStatement,
    TranslationMode,
)
from .templates import BackendError
from .verify import Verifier, semantic_verify


class EmptyPremisesError(ValueError):
    pass


class TranslationBackend(Protocol):
    name: str

    def translate(self, span: SentenceSpan) -> Formula | None: ...


@dataclass
class TranslationPipeline:
    backend: TranslationBackend
    verifier: Verifier
    inventory: tuple[FilterPattern, ...] | None = None


def translate_candidate(span: SentenceSpan, backend: TranslationBackend) -> Formula | None:
    """One candidate formula for the sentence, or None when the backend has none."""
    return backend.translate(span)


def _selective(span: SentenceSpan, pipeline: TranslationPipeline) -> HybridStatement:
    verdict = structural_filter(span, pipeline.inventory)
    if not verdict.accepted:
        return TextStatement(span)
    try:
        candidate = translate_candidate(span, pipeline.backend)
    except BackendError:
        # oracle trouble is uncertainty, and uncertainty keeps the sentence
        return TextStatement(span)
    if candidate is None:
        return TextStatement(span)
    outcome = semantic_verify(span, candidate, pipeline.verifier)
    if not outcome.accepted:
        return TextStatement(span)
    return LogicStatement(candidate, span)


def _forced(span: SentenceSpan, pipeline: TranslationPipeline) -> HybridStatement:
    try:
        candidate = translate_candidate(span, pipeline.backend)
    except BackendError:
        return TextStatement(span)
    if candidate is None:
        return TextStatement(span)
    return LogicStatement(candidate, span)


def build_hybrid_context(
    premises: Sequence[SentenceSpan],
    conclusion: SentenceSpan,
    mode: TranslationMode,
    pipeline: TranslationPipeline,
) -> HybridContext:
    """Build the premise/conclusion statement set for one problem.

    Selective runs filter -> translate -> verify per sentence and keeps the
    sentence as text on any rejection; AllNL keeps everything as text; AllFOL
    forces translation and only falls back to text when no candidate exists.
    No sentence is ever dropped.
    """
    if not premises:
        raise EmptyPremisesError("at least one premise sentence is required")
    if mode is TranslationMode.ALL_NL:
        convert = lambda span: TextStatement(span)  # noqa: E731
    elif mode is TranslationMode.ALL_FOL:
        convert = lambda span: _forced(span, pipeline)  # noqa: E731
    else:
        convert = lambda span: _selective(span, pipeline)  # noqa: E731
    return HybridContext(
        premises=tuple(convert(span) for span in premises),
        conclusion=convert(conclusion),
    )
