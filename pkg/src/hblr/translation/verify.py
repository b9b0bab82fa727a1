"""Semantic verification of candidate logical forms.

The rule is strict: any outcome other than full verification rejects the
candidate, and the sentence stays in natural language. An incorrect logical
form is worse than untranslated text.
"""

from __future__ import annotations

from typing import Protocol

from ..fol import Formula, is_closed, print_formula
from .spans import SentenceSpan, VerifierVerdict
from .verbalize import content_sequences, content_tokens


class Verifier(Protocol):
    def verify(self, span: SentenceSpan, formula: Formula) -> VerifierVerdict: ...


class OfflineVerifier:
    """Deterministic verifier: verbalize the formula back to canonical English
    and require the sentence's content tokens to match in order."""

    def verify(self, span: SentenceSpan, formula: Formula) -> VerifierVerdict:
        candidates = content_sequences(formula)
        if not candidates:
            return VerifierVerdict(
                False, "uncertain", "formula shape has no canonical verbalization"
            )
        observed = content_tokens(span.text)
        if observed in candidates:
            return VerifierVerdict(
                True, "verified", f"content tokens match: {' '.join(observed)}"
            )
        rendered = " | ".join(" ".join(c) for c in candidates)
        return VerifierVerdict(
            False,
            "rejected",
            f"sentence tokens {' '.join(observed)!r} != verbalization {rendered!r}",
        )


class OracleVerifier:
    """LLM-backed verifier; transport failures count as uncertainty, never
    acceptance."""

    def __init__(self, client, prompt_version: str = "v1"):
        self._client = client
        self._prompt_version = prompt_version

    def verify(self, span: SentenceSpan, formula: Formula) -> VerifierVerdict:
        from ..oracle import OracleRequest, OracleTask, TransportError

        request = OracleRequest(
            OracleTask.VERIFY_TRANSLATION,
            {"sentence": span.text, "formula": print_formula(formula)},
            prompt_version=self._prompt_version,
        )
        try:
            response = self._client.query(request)
        except TransportError as exc:
            return VerifierVerdict(False, "uncertain", f"oracle transport failed: {exc}")
        if response.malformed:
            return VerifierVerdict(
                False, "uncertain", f"malformed oracle reply: {response.raw[:80]!r}"
            )
        label = response.answer.label
        if label == "verified":
            return VerifierVerdict(True, "verified", "oracle confirmed the form")
        return VerifierVerdict(False, label, f"oracle answered {label}")


def semantic_verify(
    span: SentenceSpan, formula: Formula, verifier: Verifier
) -> VerifierVerdict:
    """Apply the strict acceptance rule to one candidate form."""
    if not is_closed(formula):
        raise ValueError(f"candidate formula is not closed: {print_formula(formula)}")
    return verifier.verify(span, formula)
