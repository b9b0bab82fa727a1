"""Versioned prompt templates, one file per task.

A file named `<task>.txt` registers version "v1"; `<task>@<version>.txt`
registers that explicit version. Templates must contain every placeholder
their task requires.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Mapping

from .types import OracleRequest, OracleTask

REQUIRED_PLACEHOLDERS: dict[OracleTask, tuple[str, ...]] = {
    OracleTask.TRANSLATE: ("{{sentence}}",),
    OracleTask.VERIFY_TRANSLATION: ("{{sentence}}", "{{formula}}"),
    OracleTask.REASON_STEP: ("{{premises}}", "{{hypothesis}}"),
    OracleTask.VERIFY_STEP: ("{{premises}}", "{{hypothesis}}", "{{derived}}"),
}


class MissingTemplateError(Exception):
    def __init__(self, task: str, version: str = "v1"):
        super().__init__(f"no prompt template for task {task!r} version {version!r}")
        self.task = task
        self.version = version


class MissingPlaceholderError(Exception):
    def __init__(self, task: str, placeholder: str):
        super().__init__(f"template for {task!r} lacks placeholder {placeholder}")
        self.task = task
        self.placeholder = placeholder


@dataclass(frozen=True)
class PromptRegistry:
    templates: Mapping[tuple[str, str], str]

    def get(self, task: OracleTask, version: str = "v1") -> str:
        try:
            return self.templates[(task.value, version)]
        except KeyError:
            raise MissingTemplateError(task.value, version) from None

    def render(self, request: OracleRequest) -> str:
        text = self.get(request.task, request.prompt_version)
        for key, value in request.payload.items():
            text = text.replace("{{" + key + "}}", str(value))
        return text

    def __len__(self) -> int:
        return len(self.templates)


def _register(templates: dict[tuple[str, str], str], stem: str, text: str) -> None:
    task_name, _, version = stem.partition("@")
    version = version or "v1"
    try:
        task = OracleTask(task_name)
    except ValueError:
        return  # unrelated file
    for placeholder in REQUIRED_PLACEHOLDERS[task]:
        if placeholder not in text:
            raise MissingPlaceholderError(task.value, placeholder)
    templates[(task.value, version)] = text


def load_prompts(directory: str | Path) -> PromptRegistry:
    """Load and validate every template in `directory`."""
    root = Path(directory)
    templates: dict[tuple[str, str], str] = {}
    for path in sorted(root.glob("*.txt")):
        _register(templates, path.stem, path.read_text(encoding="utf-8"))
    for task in OracleTask:
        if (task.value, "v1") not in templates and not any(
            key[0] == task.value for key in templates
        ):
            raise MissingTemplateError(task.value)
    return PromptRegistry(templates)


_DEFAULT: PromptRegistry | None = None


def default_registry() -> PromptRegistry:
    """Registry built from the templates shipped with the package."""
    global _DEFAULT
    if _DEFAULT is None:
        templates: dict[tuple[str, str], str] = {}
        base = resources.files("hblr.oracle").joinpath("templates")
        for entry in sorted(base.iterdir(), key=lambda e: e.name):
            if entry.name.endswith(".txt"):
                _register(templates, entry.name[: -len(".txt")], entry.read_text(encoding="utf-8"))
        _DEFAULT = PromptRegistry(templates)
    return _DEFAULT
