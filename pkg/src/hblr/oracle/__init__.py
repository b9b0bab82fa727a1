"""Pluggable natural-language reasoning/verification backend: HTTP client,
deterministic scripted stub, response-schema enforcement, caching, and rate
limiting."""

from .cache import ResponseCache
from .client import OracleClient
from .http import API_KEY_ENV, HttpChatBackend
from .prompts import (
    MissingPlaceholderError,
    MissingTemplateError,
    PromptRegistry,
    default_registry,
    load_prompts,
)
from .ratelimit import RateLimiter
from .schema import parse_answer
from .stub import ScriptedOracleBackend
from .types import (
    OracleAnswer,
    OracleRequest,
    OracleResponse,
    OracleTask,
    StepConfirmation,
    StepProposal,
    TranslationAnswer,
    TransportError,
    UnconfiguredError,
    VerificationAnswer,
    cache_key,
)

__all__ = [
    "API_KEY_ENV",
    "HttpChatBackend",
    "MissingPlaceholderError",
    "MissingTemplateError",
    "OracleAnswer",
    "OracleClient",
    "OracleRequest",
    "OracleResponse",
    "OracleTask",
    "PromptRegistry",
    "RateLimiter",
    "ResponseCache",
    "ScriptedOracleBackend",
    "StepConfirmation",
    "StepProposal",
    "TranslationAnswer",
    "TransportError",
    "UnconfiguredError",
    "VerificationAnswer",
    "cache_key",
    "default_registry",
    "load_prompts",
    "parse_answer",
]
