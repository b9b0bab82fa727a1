"""Chat-completion HTTP backend with deterministic sampling."""

from __future__ import annotations

import logging
import os

import httpx

from .types import OracleRequest, TransportError, UnconfiguredError

log = logging.getLogger("hblr.oracle")

API_KEY_ENV = "HBLR_API_KEY"


class HttpChatBackend:
    """POSTs prompts to a chat-completion-style endpoint at temperature 0."""

    def __init__(
        self,
        base_url: str,
        model: str,
        api_key: str | None = None,
        timeout: float = 30.0,
        transport: httpx.BaseTransport | None = None,
        trace: bool = False,
    ):
        if not base_url:
            raise UnconfiguredError("base_url is required")
        self._base_url = base_url.rstrip("/")
        self._model = model
        self._api_key = api_key if api_key is not None else os.environ.get(API_KEY_ENV)
        self._trace = trace
        self._client = httpx.Client(timeout=timeout, transport=transport)

    def complete(self, prompt: str, request: OracleRequest) -> str:
        if not self._api_key:
            raise UnconfiguredError(f"set {API_KEY_ENV} to use the HTTP backend")
        body = {
            "model": self._model,
            "messages": [{"role": "user", "content": prompt}],
            "temperature": 0,
        }
        if self._trace:
            log.info(
                "oracle request task=%s url=%s auth=<redacted> body=%s",
                request.task.value,
                f"{self._base_url}/chat/completions",
                body,
            )
        try:
            response = self._client.post(
                f"{self._base_url}/chat/completions",
                json=body,
                headers={"Authorization": f"Bearer {self._api_key}"},
            )
        except httpx.HTTPError as exc:
            raise TransportError(str(exc)) from exc
        if response.status_code != 200:
            raise TransportError(f"HTTP {response.status_code}: {response.text[:200]}")
        try:
            content = response.json()["choices"][0]["message"]["content"]
        except (KeyError, IndexError, TypeError, ValueError) as exc:
            raise TransportError(f"unexpected completion body: {exc}") from exc
        if self._trace:
            log.info("oracle response task=%s body=%s", request.task.value, content)
        return str(content)

    def close(self) -> None:
        self._client.close()
