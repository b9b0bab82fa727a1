"""Deterministic template backend for synthetic-corpus sentence shapes.

Covers universal copulars ("Every cat is an animal."), negative universals
("No cat is a dog."), variable conditionals ("If something is a wumpus then
it is feisty."), and instance copulars ("Tom is a cat."). Anything else
yields no candidate.
"""

from __future__ import annotations

from ..fol import And, Atom, Constant, ForAll, Formula, Implies, Not, Variable
from .patterns import tokenize
from .spans import SentenceSpan


class BackendError(Exception):
    """Translation backend transport failure (distinct from a clean refusal)."""


_ARTICLES = {"a", "an"}
_UNIVERSALS = {"every", "each", "any", "all"}
_COND_SUBJECTS = {"something", "someone", "anything", "anyone", "somebody", "anybody"}
_COND_PRONOUNS = {"it", "they", "he", "she", "one"}
_NON_SUBJECTS = _UNIVERSALS | _COND_SUBJECTS | _COND_PRONOUNS | {
    "no",
    "if",
    "when",
    "then",
    "the",
    "a",
    "an",
    "this",
    "that",
    "these",
    "those",
    "there",
    "some",
    "most",
    "not",
    "is",
    "are",
    "and",
    "or",
}


def _singular(word: str) -> str:
    if word.endswith(("ss", "ous", "us")):
        return word
    if word.endswith("ses"):
        return word[:-2]
    if word.endswith("ies") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith("s"):
        return word[:-1]
    return word


def _predicate(word: str) -> str:
    return word[0].upper() + word[1:]


def _copula_tail(tokens: list[str], plural_ok: bool) -> tuple[bool, str] | None:
    """Match `is/are (not)? (a|an)? WORD` consuming all tokens."""
    if not tokens or tokens[0] not in ("is", "are"):
        return None
    plural = tokens[0] == "are"
    rest = tokens[1:]
    negated = False
    if rest and rest[0] == "not":
        negated = True
        rest = rest[1:]
    if rest and rest[0] in _ARTICLES:
        rest = rest[1:]
    if len(rest) != 1 or not rest[0] or not rest[0][0].isalpha():
        return None
    word = rest[0]
    if plural:
        if not plural_ok:
            return None
        word = _singular(word)
    return negated, word


def _unary(word: str, var: str) -> Atom:
    return Atom(_predicate(word), (Variable(var),))


def _universal(tokens: list[str]) -> Formula | None:
    # every/each/any/all SUBJECT is/are (not)? (a|an)? OBJECT
    if len(tokens) < 4:
        return None
    subject = tokens[1]
    tail = _copula_tail(tokens[2:], plural_ok=tokens[0] == "all")
    if tail is None or not subject[0].isalpha():
        return None
    negated, obj = tail
    if tokens[0] == "all":
        subject = _singular(subject)
    head: Formula = _unary(obj, "x")
    if negated:
        head = Not(head)
    return ForAll("x", Implies(_unary(subject, "x"), head))


def _negative_universal(tokens: list[str]) -> Formula | None:
    # no SUBJECT is/are (a|an)? OBJECT
    if len(tokens) < 4 or "not" in tokens:
        return None
    subject = tokens[1]
    tail = _copula_tail(tokens[2:], plural_ok=True)
    if tail is None or not subject[0].isalpha():
        return None
    negated, obj = tail
    if negated:
        return None
    if tokens[2] == "are":
        subject = _singular(subject)
    return ForAll("x", Implies(_unary(subject, "x"), Not(_unary(obj, "x"))))


def _conjunct_groups(tokens: list[str]) -> list[list[str]] | None:
    groups: list[list[str]] = [[]]
    for tok in tokens:
        if tok == "and":
            if not groups[-1]:
                return None
            groups.append([])
        else:
            groups[-1].append(tok)
    if not groups[-1]:
        return None
    return groups


def _condition_literal(group: list[str], var: str) -> Formula | None:
    rest = list(group)
    negated = False
    if rest and rest[0] == "not":
        negated = True
        rest = rest[1:]
    if rest and rest[0] in _ARTICLES:
        rest = rest[1:]
    if len(rest) != 1 or not rest[0][0].isalpha():
        return None
    atom = _unary(rest[0], var)
    return Not(atom) if negated else atom


def _conditional(tokens: list[str]) -> Formula | None:
    # if SUBJ is/are COND (and COND)* then PRON is/are (not)? (a|an)? OBJ
    if "then" not in tokens:
        return None
    split = tokens.index("then")
    ant, cons = tokens[1:split], tokens[split + 1 :]
    if len(ant) < 3 or ant[0] not in _COND_SUBJECTS or ant[1] not in ("is", "are"):
        return None
    groups = _conjunct_groups(ant[2:])
    if groups is None:
        return None
    body: Formula | None = None
    for group in groups:
        lit = _condition_literal(group, "x")
        if lit is None:
            return None
        body = lit if body is None else And(body, lit)
    if len(cons) < 2 or cons[0] not in _COND_PRONOUNS:
        return None
    tail = _copula_tail(cons[1:], plural_ok=True)  # "they are nice"
    if tail is None:
        return None
    negated, obj = tail
    head: Formula = _unary(obj, "x")
    if negated:
        head = Not(head)
    assert body is not None
    return ForAll("x", Implies(body, head))


def _instance(tokens: list[str]) -> Formula | None:
    # NAME is (not)? (a|an)? PRED
    subject = tokens[0]
    if subject in _NON_SUBJECTS or not subject[0].isalpha():
        return None
    tail = _copula_tail(tokens[1:], plural_ok=False)
    if tail is None:
        return None
    negated, pred = tail
    atom = Atom(_predicate(pred), (Constant(subject),))
    return Not(atom) if negated else atom


class TemplateTranslationBackend:
    """Pure, deterministic sentence-shape translator."""

    name = "template"

    def translate(self, span: SentenceSpan) -> Formula | None:
        tokens = tokenize(span.text)
        if len(tokens) < 2:
            return None
        first = tokens[0]
        if first in _UNIVERSALS:
            return _universal(tokens)
        if first == "no":
            return _negative_universal(tokens)
        if first == "if":
            return _conditional(tokens)
        return _instance(tokens)
