"""Structural filter: deterministic detection of logic-compatible sentences.

The pattern inventory ships as data (one `id<TAB>regex` per line) so it can be
audited and extended without code changes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .spans import FilterVerdict, SentenceSpan


@dataclass(frozen=True)
class FilterPattern:
    pattern_id: str
    cue: str

    def compiled(self) -> re.Pattern[str]:
        return re.compile(self.cue)


_WORD_RE = re.compile(r"[a-z0-9_']+")


def tokenize(text: str) -> list[str]:
    """Lowercased word tokens with punctuation stripped (apostrophes removed)."""
    return [w.replace("'", "") for w in _WORD_RE.findall(text.lower())]


def normalized(text: str) -> str:
    return " ".join(tokenize(text))


def load_pattern_inventory(path: str | Path | None = None) -> tuple[FilterPattern, ...]:
    if path is None:
        source = resources.files("hblr.translation").joinpath("data/patterns.tsv")
        raw = source.read_text(encoding="utf-8")
    else:
        raw = Path(path).read_text(encoding="utf-8")
    patterns: list[FilterPattern] = []
    for line_no, line in enumerate(raw.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        try:
            pattern_id, cue = line.split("\t", 1)
        except ValueError:
            raise ValueError(f"pattern inventory line {line_no}: expected id<TAB>cue")
        pattern = FilterPattern(pattern_id.strip(), cue.strip())
        pattern.compiled()  # fail fast on a bad regex
        patterns.append(pattern)
    if not patterns:
        raise ValueError("pattern inventory is empty")
    return tuple(patterns)


_DEFAULT_INVENTORY: tuple[FilterPattern, ...] | None = None


def default_inventory() -> tuple[FilterPattern, ...]:
    global _DEFAULT_INVENTORY
    if _DEFAULT_INVENTORY is None:
        _DEFAULT_INVENTORY = load_pattern_inventory()
    return _DEFAULT_INVENTORY


def structural_filter(
    span: SentenceSpan, inventory: tuple[FilterPattern, ...] | None = None
) -> FilterVerdict:
    """Accept a sentence iff at least one inventory cue matches its tokens."""
    patterns = inventory if inventory is not None else default_inventory()
    text = normalized(span.text)
    matched = tuple(p.pattern_id for p in patterns if p.compiled().search(text))
    if matched:
        rationale = f"matched cues: {', '.join(matched)}"
    else:
        rationale = "no logic-compatible cue found"
    return FilterVerdict(bool(matched), matched, rationale)
