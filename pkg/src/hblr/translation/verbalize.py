"""Canonical verbalization of formulas for the offline semantic verifier.

A formula verbalizes to one or more normalized content-token sequences; a
sentence verifies against the formula iff its own content tokens equal one of
them. Sequences are order-sensitive, which is what distinguishes
"every cat is an animal" from "every animal is a cat".
"""

from __future__ import annotations

from ..fol import Atom, Constant, ForAll, Formula, Implies, Not, Variable
from .patterns import tokenize

# Structural words removed before comparison. Negation words and the
# connectives and/or/unless stay, because dropping them would change meaning.
STOPWORDS = frozenset(
    {
        "a", "an", "the",
        "is", "are", "was", "were", "be", "been", "being",
        "if", "then", "when",
        "it", "they", "them", "he", "she", "we", "i", "you", "one",
        "someone", "something", "anyone", "anything", "somebody", "anybody",
        "that", "this", "these", "those", "there",
        "thing", "things", "person", "people",
        "who", "whom", "which", "of", "to",
        "every", "all", "each", "any",
    }
)


def content_tokens(text: str) -> tuple[str, ...]:
    return tuple(t for t in tokenize(text) if t not in STOPWORDS)


def _word(predicate: str) -> str:
    return predicate.lower()


def _unary_literal(formula: Formula, var: str) -> tuple[bool, str] | None:
    positive = True
    node = formula
    while isinstance(node, Not):
        positive = not positive
        node = node.operand
    if (
        isinstance(node, Atom)
        and len(node.args) == 1
        and node.args[0] == Variable(var)
    ):
        return positive, _word(node.predicate)
    return None


def _body_literals(formula: Formula, var: str) -> list[tuple[bool, str]] | None:
    from ..fol import And

    if isinstance(formula, And):
        left = _body_literals(formula.left, var)
        right = _body_literals(formula.right, var)
        if left is None or right is None:
            return None
        return left + right
    lit = _unary_literal(formula, var)
    return None if lit is None else [lit]


def content_sequences(formula: Formula) -> tuple[tuple[str, ...], ...]:
    """Normalized content sequences the formula can verbalize to; empty if the
    shape is not verbalizable."""
    # ground unary literal: "tom is (not) a cat"
    positive = True
    node = formula
    while isinstance(node, Not):
        positive = not positive
        node = node.operand
    if isinstance(node, Atom) and len(node.args) == 1 and isinstance(node.args[0], Constant):
        name = node.args[0].name
        word = _word(node.predicate)
        if positive:
            return ((name, word),)
        return ((name, "not", word),)

    # universally quantified implication over one variable
    if isinstance(formula, ForAll) and isinstance(formula.body, Implies):
        var = formula.var
        body = _body_literals(formula.body.left, var)
        head = _unary_literal(formula.body.right, var)
        if body is None or head is None:
            return ()
        base: list[str] = []
        for i, (pos, word) in enumerate(body):
            if i:
                base.append("and")
            if not pos:
                base.append("not")
            base.append(word)
        head_pos, head_word = head
        base_seq = tuple(base) + (() if head_pos else ("not",)) + (head_word,)
        sequences = [base_seq]
        if len(body) == 1 and body[0][0] and not head_pos:
            # "no cat is a dog" variant of Cat -> ~Dog
            sequences.append(("no", body[0][1], head_word))
        return tuple(sequences)

    return ()
