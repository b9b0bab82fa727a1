"""Compilation of formulas into Horn-style rules over signed literals.

A formula compiles when, after expanding biconditionals, distributing
universal quantifiers and conjunctive consequents, and currying nested
implications, every conjunct is either a universally quantified implication
(conjunction of literals -> literal) or a ground literal. Anything else
raises NotHornable and stays usable only through the oracle path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .substitution import Substitution
from .syntax import (
    And,
    Atom,
    Exists,
    ForAll,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    free_variables,
    is_closed,
    print_formula,
)


@dataclass(frozen=True)
class Literal:
    atom: Atom
    positive: bool = True

    def negated(self) -> "Literal":
        return Literal(self.atom, not self.positive)

    def as_formula(self) -> Formula:
        return self.atom if self.positive else Not(self.atom)

    def is_ground(self) -> bool:
        return not free_variables(self.atom)

    def apply(self, subst: Substitution) -> "Literal":
        applied = subst.apply_to_formula(self.atom)
        assert isinstance(applied, Atom)
        return Literal(applied, self.positive)

    def render(self) -> str:
        return print_formula(self.as_formula())


@dataclass(frozen=True)
class HornRule:
    head: Literal
    body: tuple[Literal, ...]
    universals: tuple[str, ...]

    def __post_init__(self) -> None:
        used = free_variables(self.head.atom)
        for lit in self.body:
            used |= free_variables(lit.atom)
        missing = used - set(self.universals)
        if missing:
            raise ValueError(f"rule variables not quantified: {sorted(missing)}")

    @property
    def is_fact(self) -> bool:
        return not self.body

    def render(self) -> str:
        if self.is_fact:
            return self.head.render()
        body = " & ".join(lit.render() for lit in self.body)
        return f"{self.head.render()} <= {body}"


class NotHornable(Exception):
    """The formula has no Horn-rule normal form; carries the offending part."""

    def __init__(self, offending: Formula, reason: str):
        super().__init__(f"{reason}: {print_formula(offending)}")
        self.offending = offending
        self.reason = reason


class NonLiteralError(Exception):
    pass


def as_literal(formula: Formula) -> Literal | None:
    """View a formula as a signed atom, eliminating double negations."""
    positive = True
    node = formula
    while isinstance(node, Not):
        positive = not positive
        node = node.operand
    if isinstance(node, Atom):
        return Literal(node, positive)
    return None


def ground_complement(a: Formula, b: Formula) -> bool:
    """True iff the two ground literals are negations of each other."""
    lit_a = as_literal(a)
    lit_b = as_literal(b)
    if lit_a is None or not lit_a.is_ground():
        raise NonLiteralError(f"not a ground literal: {print_formula(a)}")
    if lit_b is None or not lit_b.is_ground():
        raise NonLiteralError(f"not a ground literal: {print_formula(b)}")
    return lit_a.atom == lit_b.atom and lit_a.positive != lit_b.positive


def _literal_conjunction(formula: Formula) -> list[Literal] | None:
    if isinstance(formula, And):
        left = _literal_conjunction(formula.left)
        right = _literal_conjunction(formula.right)
        if left is None or right is None:
            return None
        return left + right
    lit = as_literal(formula)
    return None if lit is None else [lit]


def _rule_variables(head: Literal, body: list[Literal]) -> tuple[str, ...]:
    seen: list[str] = []
    for lit in [*body, head]:
        for name in sorted(free_variables(lit.atom)):
            if name not in seen:
                seen.append(name)
    return tuple(seen)


def _compile_conjunct(formula: Formula, universals: tuple[str, ...], out: list[HornRule]) -> None:
    if isinstance(formula, And):
        _compile_conjunct(formula.left, universals, out)
        _compile_conjunct(formula.right, universals, out)
        return
    if isinstance(formula, ForAll):
        _compile_conjunct(formula.body, universals + (formula.var,), out)
        return
    if isinstance(formula, Iff):
        _compile_conjunct(Implies(formula.left, formula.right), universals, out)
        _compile_conjunct(Implies(formula.right, formula.left), universals, out)
        return
    if isinstance(formula, Implies):
        body_part: Formula = formula.left
        head_part: Formula = formula.right
        # curry nested implications: A -> (B -> C) becomes (A & B) -> C
        while isinstance(head_part, Implies):
            body_part = And(body_part, head_part.left)
            head_part = head_part.right
        if isinstance(head_part, And):
            # distribute a conjunctive consequent into one rule per conjunct
            _compile_conjunct(Implies(body_part, head_part.left), universals, out)
            _compile_conjunct(Implies(body_part, head_part.right), universals, out)
            return
        head_lit = as_literal(head_part)
        if head_lit is None:
            raise NotHornable(head_part, "consequent is not a literal")
        body_lits = _literal_conjunction(body_part)
        if body_lits is None:
            raise NotHornable(body_part, "antecedent is not a conjunction of literals")
        used = _rule_variables(head_lit, body_lits)
        out.append(HornRule(head_lit, tuple(body_lits), used))
        return
    if isinstance(formula, Exists):
        raise NotHornable(formula, "existential quantifier")
    if isinstance(formula, Or):
        raise NotHornable(formula, "disjunction outside an implication")
    lit = as_literal(formula)
    if lit is None:
        raise NotHornable(formula, "not a literal")
    if universals or not lit.is_ground():
        raise NotHornable(formula, "bare literal must be ground")
    out.append(HornRule(lit, (), ()))


def to_horn(formula: Formula) -> list[HornRule]:
    """Compile a closed formula into Horn rules, or raise NotHornable."""
    if not is_closed(formula):
        raise ValueError(f"formula is not closed: {print_formula(formula)}")
    rules: list[HornRule] = []
    _compile_conjunct(formula, (), rules)
    return rules
