"""Translation backend delegating to the oracle client."""

from __future__ import annotations

from ..fol import Formula, FormulaSyntaxError, parse_formula
from ..oracle import OracleClient, OracleRequest, OracleTask, TransportError
from .spans import SentenceSpan
from .templates import BackendError


class OracleTranslationBackend:
    """Asks the oracle for one candidate form per sentence.

    Clean refusals and unparsable output yield no candidate; transport
    failures surface as BackendError so callers can tell them apart.
    """

    name = "oracle"

    def __init__(self, client: OracleClient, prompt_version: str = "v1"):
        self._client = client
        self._prompt_version = prompt_version

    def translate(self, span: SentenceSpan) -> Formula | None:
        request = OracleRequest(
            OracleTask.TRANSLATE,
            {"sentence": span.text},
            prompt_version=self._prompt_version,
        )
        try:
            response = self._client.query(request)
        except TransportError as exc:
            raise BackendError(str(exc)) from exc
        if response.malformed or response.answer.refused:
            return None
        try:
            return parse_formula(response.answer.formula_text)
        except FormulaSyntaxError:
            return None
