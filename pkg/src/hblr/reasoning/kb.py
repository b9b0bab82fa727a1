"""Symbolic view of a hybrid context: indexed facts and rules."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from ..fol import (
    And,
    Formula,
    HornRule,
    Literal,
    NotHornable,
    Substitution,
    Variable,
    as_literal,
    to_horn,
)
from ..translation import (
    HybridContext,
    HybridStatement,
    LogicStatement,
    SentenceSpan,
    statement_text,
)


@dataclass(frozen=True)
class SymbolicKB:
    facts: tuple[tuple[int, Literal], ...]
    rules: tuple[tuple[int, HornRule], ...]
    oracle_only: tuple[int, ...]  # text premises and non-Horn logic

    @property
    def has_oracle_material(self) -> bool:
        return bool(self.oracle_only)


def compile_context(ctx: HybridContext) -> SymbolicKB:
    facts: list[tuple[int, Literal]] = []
    rules: list[tuple[int, HornRule]] = []
    oracle_only: list[int] = []
    for index, statement in enumerate(ctx.premises):
        if not isinstance(statement, LogicStatement):
            oracle_only.append(index)
            continue
        try:
            compiled = to_horn(statement.formula)
        except NotHornable:
            oracle_only.append(index)
            continue
        for rule in compiled:
            if rule.is_fact:
                facts.append((index, rule.head))
            else:
                rules.append((index, rule))
    return SymbolicKB(tuple(facts), tuple(rules), tuple(oracle_only))


def conclusion_literal(ctx: HybridContext) -> Literal | None:
    """The conclusion as a signed atom when it is symbolic, else None."""
    if isinstance(ctx.conclusion, LogicStatement):
        return as_literal(ctx.conclusion.formula)
    return None


def premise_fact_literals(statement: HybridStatement) -> tuple[Literal, ...]:
    """Ground literals a premise contributes directly (for match rechecks)."""
    if not isinstance(statement, LogicStatement):
        return ()
    try:
        compiled = to_horn(statement.formula)
    except NotHornable:
        lit = as_literal(statement.formula)
        return (lit,) if lit is not None else ()
    return tuple(rule.head for rule in compiled if rule.is_fact)


def render_premises(ctx: HybridContext) -> str:
    return "\n".join(
        f"{i + 1}. {statement_text(p)}" for i, p in enumerate(ctx.premises)
    )


def standardize_apart(rule: HornRule, counter: int) -> HornRule:
    """Rename rule variables so they cannot collide with goal variables."""
    if not rule.universals:
        return rule
    renaming = Substitution(
        {name: Variable(f"{name}__r{counter}") for name in rule.universals}
    )
    return HornRule(
        head=rule.head.apply(renaming),
        body=tuple(lit.apply(renaming) for lit in rule.body),
        universals=tuple(f"{name}__r{counter}" for name in rule.universals),
    )


def body_instance_formula(rule: HornRule, unifier: Substitution) -> Formula:
    """The rule body under the unifier, as a left-associated conjunction."""
    parts = [lit.apply(unifier).as_formula() for lit in rule.body]
    if not parts:
        return rule.head.apply(unifier).as_formula()
    formula = parts[0]
    for part in parts[1:]:
        formula = And(formula, part)
    return formula


def digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


def derived_hypothesis_span(origin: SentenceSpan, text: str) -> SentenceSpan:
    """Span for an oracle-refined hypothesis; anchored at the lineage root."""
    return SentenceSpan(text=text, index=origin.index, role=origin.role)
