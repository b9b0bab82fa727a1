"""Confidence-gated translation of sentences into logic and hybrid context
assembly."""

from .context import (
    EmptyPremisesError,
    TranslationBackend,
    TranslationPipeline,
    build_hybrid_context,
    translate_candidate,
)
from .oracle_backed import OracleTranslationBackend
from .patterns import (
    FilterPattern,
    default_inventory,
    load_pattern_inventory,
    normalized,
    structural_filter,
    tokenize,
)
from .spans import (
    FilterVerdict,
    HybridContext,
    HybridStatement,
    LogicStatement,
    SentenceSpan,
    TextStatement,
    TranslationMode,
    VerifierVerdict,
    statement_text,
)
from .templates import BackendError, TemplateTranslationBackend
from .verbalize import STOPWORDS, content_sequences, content_tokens
from .verify import OfflineVerifier, OracleVerifier, Verifier, semantic_verify

__all__ = [
    "BackendError",
    "EmptyPremisesError",
    "FilterPattern",
    "FilterVerdict",
    "HybridContext",
    "HybridStatement",
    "LogicStatement",
    "OfflineVerifier",
    "OracleTranslationBackend",
    "OracleVerifier",
    "STOPWORDS",
    "SentenceSpan",
    "TemplateTranslationBackend",
    "TextStatement",
    "TranslationBackend",
    "TranslationMode",
    "TranslationPipeline",
    "Verifier",
    "VerifierVerdict",
    "build_hybrid_context",
    "content_sequences",
    "content_tokens",
    "default_inventory",
    "load_pattern_inventory",
    "normalized",
    "semantic_verify",
    "statement_text",
    "structural_filter",
    "tokenize",
    "translate_candidate",
]
