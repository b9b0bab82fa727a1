"""Recursive-descent parser for the FOL surface syntax.

Grammar (whitespace insignificant, UTF-8 input):

    formula := quant | binary
    quant   := ("forall" | "exists") IDENT "." formula
    binary  := unary (("&" | "|" | "->" | "<->") unary)?
    unary   := "~" unary | atom | "(" formula ")"
    atom    := IDENT ("(" term ("," term)* ")")?
    term    := IDENT ("(" term ("," term)* ")")?

Identifiers bound by an enclosing quantifier parse as variables; everything
else parses as a constant. Nested binders reusing a name are renamed so
binder names are unique along any root-to-leaf path.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .syntax import (
    And,
    Atom,
    Constant,
    Exists,
    ForAll,
    Formula,
    Function,
    Iff,
    Implies,
    Not,
    Or,
    Term,
    Variable,
    fresh_name,
)

_KEYWORDS = ("forall", "exists")

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
  | (?P<iff><->)
  | (?P<implies>->)
  | (?P<op>[~&|().,])
    """,
    re.VERBOSE,
)


class FormulaSyntaxError(ValueError):
    """Malformed surface syntax; carries the byte offset and the expected tokens."""

    def __init__(self, message: str, offset: int, expected: tuple[str, ...]):
        super().__init__(f"{message} at byte {offset} (expected {', '.join(expected)})")
        self.offset = offset
        self.expected = expected


@dataclass(frozen=True)
class _Token:
    kind: str  # ident | forall | exists | ~ & | -> <-> ( ) . , | eof
    text: str
    offset: int  # byte offset into the UTF-8 encoding of the input


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    byte_pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(
                f"unexpected character {text[pos]!r}", byte_pos, ("token",)
            )
        chunk = text[pos : m.end()]
        if m.lastgroup == "ident":
            kind = chunk if chunk in _KEYWORDS else "ident"
            tokens.append(_Token(kind, chunk, byte_pos))
        elif m.lastgroup != "ws":
            tokens.append(_Token(chunk, chunk, byte_pos))
        pos = m.end()
        byte_pos += len(chunk.encode("utf-8"))
    tokens.append(_Token("eof", "", byte_pos))
    return tokens


_BINARY = {"&": And, "|": Or, "->": Implies, "<->": Iff}


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        # every identifier in the input, so fresh binder names cannot collide
        self.used_names = {t.text for t in self.tokens if t.kind == "ident"}
        self.binders: list[tuple[str, str]] = []  # (surface name, actual name)
        self.arities: dict[str, int] = {}

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.current
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        if self.current.kind != kind:
            self.fail((kind,))
        return self.advance()

    def fail(self, expected: tuple[str, ...]) -> None:
        tok = self.current
        shown = tok.text or "end of input"
        raise FormulaSyntaxError(f"unexpected {shown!r}", tok.offset, expected)

    def lookup_binder(self, name: str) -> str | None:
        for surface, actual in reversed(self.binders):
            if surface == name:
                return actual
        return None

    def parse(self) -> Formula:
        f = self.formula()
        if self.current.kind != "eof":
            self.fail(("eof",))
        return f

    def formula(self) -> Formula:
        if self.current.kind in _KEYWORDS:
            return self.quantified()
        return self.binary()

    def quantified(self) -> Formula:
        kw = self.advance()
        name_tok = self.current
        if name_tok.kind != "ident":
            self.fail(("ident",))
        self.advance()
        surface = name_tok.text
        # rename when this name is already bound along the current path
        actual = surface
        if any(a == surface for _, a in self.binders) or self.lookup_binder(surface):
            actual = fresh_name(surface, self.used_names)
        self.used_names.add(actual)
        self.expect(".")
        self.binders.append((surface, actual))
        try:
            body = self.formula()
        finally:
            self.binders.pop()
        node = ForAll if kw.kind == "forall" else Exists
        return node(actual, body)

    def binary(self) -> Formula:
        left = self.unary()
        if self.current.kind in _BINARY:
            op = self.advance()
            # a quantifier may appear as the right operand; its scope extends
            # maximally right
            if self.current.kind in _KEYWORDS:
                right: Formula = self.quantified()
            else:
                right = self.unary()
            return _BINARY[op.kind](left, right)
        return left

    def unary(self) -> Formula:
        tok = self.current
        if tok.kind == "~":
            self.advance()
            return Not(self.unary())
        if tok.kind == "(":
            self.advance()
            inner = self.formula()
            self.expect(")")
            return inner
        if tok.kind == "ident":
            return self.atom()
        self.fail(("~", "(", "ident"))
        raise AssertionError("unreachable")

    def atom(self) -> Formula:
        name = self.expect("ident")
        args: tuple[Term, ...] = ()
        if self.current.kind == "(":
            self.advance()
            parts = [self.term()]
            while self.current.kind == ",":
                self.advance()
                parts.append(self.term())
            self.expect(")")
            args = tuple(parts)
        return Atom(name.text, args)

    def term(self) -> Term:
        name_tok = self.current
        if name_tok.kind != "ident":
            self.fail(("ident",))
        self.advance()
        if self.current.kind == "(":
            self.advance()
            parts = [self.term()]
            while self.current.kind == ",":
                self.advance()
                parts.append(self.term())
            self.expect(")")
            known = self.arities.get(name_tok.text)
            if known is not None and known != len(parts):
                raise FormulaSyntaxError(
                    f"function {name_tok.text!r} used with arity {len(parts)}, "
                    f"previously {known}",
                    name_tok.offset,
                    ("consistent arity",),
                )
            self.arities[name_tok.text] = len(parts)
            return Function(name_tok.text, tuple(parts))
        actual = self.lookup_binder(name_tok.text)
        if actual is not None:
            return Variable(actual)
        return Constant(name_tok.text)


def parse_formula(text: str) -> Formula:
    """Parse surface syntax into an AST with path-unique binder names."""
    return _Parser(text).parse()
