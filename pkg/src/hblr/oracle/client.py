"""Oracle client: prompt rendering, caching, rate limiting, retries, schema
enforcement."""

from __future__ import annotations

import time
from typing import Protocol

from .cache import ResponseCache
from .prompts import PromptRegistry, default_registry
from .ratelimit import RateLimiter
from .schema import parse_answer
from .types import OracleRequest, OracleResponse, TransportError, cache_key


class Backend(Protocol):
    def complete(self, prompt: str, request: OracleRequest) -> str: ...


class OracleClient:
    """Safe for concurrent callers; identical requests are served from cache."""

    def __init__(
        self,
        backend: Backend,
        prompts: PromptRegistry | None = None,
        cache: ResponseCache | None = None,
        rate_limiter: RateLimiter | None = None,
        retries: int = 2,
        backoff: float = 0.05,
    ):
        self._backend = backend
        self._prompts = prompts if prompts is not None else default_registry()
        self._cache = cache if cache is not None else ResponseCache()
        self._limiter = rate_limiter if rate_limiter is not None else RateLimiter(None)
        self._retries = retries
        self._backoff = backoff

    def query(self, request: OracleRequest) -> OracleResponse:
        key = cache_key(request)
        cached = self._cache.get(key)
        if cached is not None:
            answer = parse_answer(request.task, cached)
            return OracleResponse(
                request.task, answer, cached, 0.0, cached=True, malformed=answer is None
            )
        prompt = self._prompts.render(request)
        raw, latency_ms = self._complete_with_retries(prompt, request)
        self._cache.put(key, raw)
        answer = parse_answer(request.task, raw)
        return OracleResponse(
            request.task, answer, raw, latency_ms, malformed=answer is None
        )

    def _complete_with_retries(
        self, prompt: str, request: OracleRequest
    ) -> tuple[str, float]:
        attempt = 0
        while True:
            self._limiter.acquire()
            started = time.monotonic()
            try:
                raw = self._backend.complete(prompt, request)
                return raw, (time.monotonic() - started) * 1000.0
            except TransportError:
                if attempt >= self._retries:
                    raise
                time.sleep(self._backoff * (2**attempt))
                attempt += 1
