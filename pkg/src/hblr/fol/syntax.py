"""First-order logic terms and formulas.

All nodes are immutable; identifiers must start with a letter and contain
only letters, digits, and underscores.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def is_identifier(name: str) -> bool:
    return bool(_IDENT_RE.match(name))


def _check_identifier(name: str, kind: str) -> None:
    if not is_identifier(name):
        raise ValueError(f"invalid {kind} identifier: {name!r}")


@dataclass(frozen=True)
class Variable:
    name: str

    def __post_init__(self) -> None:
        _check_identifier(self.name, "variable")


@dataclass(frozen=True)
class Constant:
    name: str

    def __post_init__(self) -> None:
        _check_identifier(self.name, "constant")


@dataclass(frozen=True)
class Function:
    name: str
    args: tuple["Term", ...]

    def __post_init__(self) -> None:
        _check_identifier(self.name, "function")
        if not self.args:
            raise ValueError("function terms require at least one argument")


Term = Union[Variable, Constant, Function]


@dataclass(frozen=True)
class Atom:
    predicate: str
    args: tuple[Term, ...] = ()

    def __post_init__(self) -> None:
        _check_identifier(self.predicate, "predicate")


@dataclass(frozen=True)
class Not:
    operand: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class ForAll:
    var: str
    body: "Formula"

    def __post_init__(self) -> None:
        _check_identifier(self.var, "variable")


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"

    def __post_init__(self) -> None:
        _check_identifier(self.var, "variable")


Formula = Union[Atom, Not, And, Or, Implies, Iff, ForAll, Exists]

_BINARY_OPS = {And: "&", Or: "|", Implies: "->", Iff: "<->"}
_QUANT_KEYWORDS = {ForAll: "forall", Exists: "exists"}


def term_variables(term: Term) -> set[str]:
    if isinstance(term, Variable):
        return {term.name}
    if isinstance(term, Function):
        out: set[str] = set()
        for arg in term.args:
            out |= term_variables(arg)
        return out
    return set()


def free_variables(formula: Formula) -> set[str]:
    """Variable names not bound by an enclosing quantifier."""
    if isinstance(formula, Atom):
        out: set[str] = set()
        for arg in formula.args:
            out |= term_variables(arg)
        return out
    if isinstance(formula, Not):
        return free_variables(formula.operand)
    if isinstance(formula, (And, Or, Implies, Iff)):
        return free_variables(formula.left) | free_variables(formula.right)
    if isinstance(formula, (ForAll, Exists)):
        return free_variables(formula.body) - {formula.var}
    raise TypeError(f"not a formula: {formula!r}")


def formula_variables(formula: Formula) -> set[str]:
    """Every variable name occurring in the formula, bound or free."""
    if isinstance(formula, Atom):
        out: set[str] = set()
        for arg in formula.args:
            out |= term_variables(arg)
        return out
    if isinstance(formula, Not):
        return formula_variables(formula.operand)
    if isinstance(formula, (And, Or, Implies, Iff)):
        return formula_variables(formula.left) | formula_variables(formula.right)
    if isinstance(formula, (ForAll, Exists)):
        return formula_variables(formula.body) | {formula.var}
    raise TypeError(f"not a formula: {formula!r}")


def is_closed(formula: Formula) -> bool:
    return not free_variables(formula)


def print_term(term: Term) -> str:
    if isinstance(term, (Variable, Constant)):
        return term.name
    return f"{term.name}({', '.join(print_term(a) for a in term.args)})"


def _print_operand(formula: Formula) -> str:
    # binary operands must be grammar "unary": atom, negation, or parenthesized
    if isinstance(formula, (Atom, Not)):
        return print_formula(formula)
    return f"({print_formula(formula)})"


def _print_quant_body(formula: Formula) -> str:
    # canonical form parenthesizes binary-connective bodies
    if isinstance(formula, (And, Or, Implies, Iff)):
        return f"({print_formula(formula)})"
    return print_formula(formula)


def print_formula(formula: Formula) -> str:
    """Render in the canonical surface syntax; reparses to an alpha-equal formula."""
    if isinstance(formula, Atom):
        if not formula.args:
            return formula.predicate
        return f"{formula.predicate}({', '.join(print_term(a) for a in formula.args)})"
    if isinstance(formula, Not):
        return "~" + _print_operand(formula.operand)
    if isinstance(formula, (And, Or, Implies, Iff)):
        op = _BINARY_OPS[type(formula)]
        return f"{_print_operand(formula.left)} {op} {_print_operand(formula.right)}"
    if isinstance(formula, (ForAll, Exists)):
        kw = _QUANT_KEYWORDS[type(formula)]
        return f"{kw} {formula.var}. {_print_quant_body(formula.body)}"
    raise TypeError(f"not a formula: {formula!r}")


def _terms_alpha_equal(a: Term, b: Term, env: dict[str, str]) -> bool:
    if isinstance(a, Variable) and isinstance(b, Variable):
        if a.name in env:
            return env[a.name] == b.name
        return a.name == b.name
    if isinstance(a, Constant) and isinstance(b, Constant):
        return a.name == b.name
    if isinstance(a, Function) and isinstance(b, Function):
        return (
            a.name == b.name
            and len(a.args) == len(b.args)
            and all(_terms_alpha_equal(x, y, env) for x, y in zip(a.args, b.args))
        )
    return False


def alpha_equivalent(a: Formula, b: Formula, _env: dict[str, str] | None = None) -> bool:
    """Structural equality up to consistent renaming of bound variables."""
    env = _env if _env is not None else {}
    if type(a) is not type(b):
        return False
    if isinstance(a, Atom):
        assert isinstance(b, Atom)
        return (
            a.predicate == b.predicate
            and len(a.args) == len(b.args)
            and all(_terms_alpha_equal(x, y, env) for x, y in zip(a.args, b.args))
        )
    if isinstance(a, Not):
        assert isinstance(b, Not)
        return alpha_equivalent(a.operand, b.operand, env)
    if isinstance(a, (And, Or, Implies, Iff)):
        assert isinstance(b, (And, Or, Implies, Iff))
        return alpha_equivalent(a.left, b.left, env) and alpha_equivalent(
            a.right, b.right, env
        )
    if isinstance(a, (ForAll, Exists)):
        assert isinstance(b, (ForAll, Exists))
        inner = dict(env)
        inner[a.var] = b.var
        return alpha_equivalent(a.body, b.body, inner)
    raise TypeError(f"not a formula: {a!r}")


def fresh_name(base: str, taken: set[str]) -> str:
    """Smallest numbered variant of `base` not in `taken`."""
    if base not in taken:
        return base
    i = 1
    while f"{base}{i}" in taken:
        i += 1
    return f"{base}{i}"
