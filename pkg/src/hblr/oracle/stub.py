"""Deterministic scripted backend; the whole primary test suite runs on it."""

from __future__ import annotations

import json
from typing import Mapping

from .types import OracleRequest, OracleTask, UnconfiguredError


def _canonical(task: OracleTask, payload: Mapping[str, str]) -> str:
    collapsed = {k: " ".join(str(v).split()) for k, v in sorted(payload.items())}
    return json.dumps({"task": task.value, "payload": collapsed}, sort_keys=True)


class ScriptedOracleBackend:
    """Replays scripted raw responses, never touching the network.

    Lookup order for a request: exact (task, payload) entry, then the
    (task, focus-field) shorthand keyed on the hypothesis/sentence text, then
    the per-task default. Unscripted tasks without a default yield an
    intentionally schema-violating reply, which callers treat as inconclusive.
    """

    FALLBACK_RAW = "UNDETERMINED"

    def __init__(
        self,
        defaults: Mapping[OracleTask, str] | None = None,
        strict: bool = False,
    ):
        self._exact: dict[str, str] = {}
        self._by_focus: dict[tuple[str, str], str] = {}
        self._defaults = dict(defaults or {})
        self._strict = strict
        self.calls: list[OracleRequest] = []

    def script(self, task: OracleTask, payload: Mapping[str, str], raw: str) -> None:
        self._exact[_canonical(task, payload)] = raw

    def script_focus(self, task: OracleTask, focus_text: str, raw: str) -> None:
        """Script by the request's hypothesis (or sentence) alone."""
        self._by_focus[(task.value, " ".join(focus_text.split()))] = raw

    def set_default(self, task: OracleTask, raw: str) -> None:
        self._defaults[task] = raw

    def _focus_of(self, request: OracleRequest) -> str | None:
        for key in ("hypothesis", "sentence"):
            if key in request.payload:
                return " ".join(str(request.payload[key]).split())
        return None

    def complete(self, prompt: str, request: OracleRequest) -> str:
        self.calls.append(request)
        exact = self._exact.get(_canonical(request.task, request.payload))
        if exact is not None:
            return exact
        focus = self._focus_of(request)
        if focus is not None:
            keyed = self._by_focus.get((request.task.value, focus))
            if keyed is not None:
                return keyed
        if request.task in self._defaults:
            return self._defaults[request.task]
        if self._strict:
            raise UnconfiguredError(
                f"stub has no script for {request.task.value} request"
            )
        return self.FALLBACK_RAW
