"""Forward-chaining baseline: breadth-first Horn saturation from the premises,
checking after each derivation whether the conclusion or its complement has
been reached. Used for the efficiency ablations and as a production sanity
route; the deliberately naive closure oracle in the test suite stays separate.
"""

from __future__ import annotations

from dataclasses import replace
from typing import Iterator

from ..fol import EMPTY_SUBSTITUTION, Literal, Substitution, try_unify
from ..translation import HybridContext, LogicStatement
from .backward import MalformedContextError, _oracle_prove, _premise_span
from .kb import compile_context, conclusion_literal
from .trace import Hypothesis, ProofTrace, ReasoningStep, RuleApplication, Verdict
from .verify import verify_step


def _body_matches(
    body: tuple[Literal, ...], facts: list[Literal], bound: Substitution
) -> Iterator[Substitution]:
    if not body:
        yield bound
        return
    first = body[0].apply(bound)
    for fact in facts:
        if fact.positive != first.positive:
            continue
        unifier = try_unify(first.atom, fact.atom)
        if unifier is not None:
            yield from _body_matches(body[1:], facts, bound.compose(unifier))


def _verdict_for(goal: Literal | None, lit: Literal) -> Verdict | None:
    if goal is None:
        return None
    if goal.is_ground():
        if lit.atom == goal.atom:
            return Verdict.TRUE if lit.positive == goal.positive else Verdict.FALSE
        return None
    if lit.positive == goal.positive and try_unify(lit.atom, goal.atom) is not None:
        return Verdict.TRUE
    return None


def forward_prove(ctx: HybridContext, budget: int = 20, oracle=None) -> ProofTrace:
    """Saturate derivable facts until the conclusion is settled, the budget is
    spent, or nothing new can be derived."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    if not isinstance(ctx, HybridContext) or not ctx.premises:
        raise MalformedContextError("context must carry at least one premise")
    kb = compile_context(ctx)
    goal = conclusion_literal(ctx)
    root = Hypothesis(ctx.conclusion, 0, None)
    steps: list[ReasoningStep] = []
    used = 0

    facts: dict[str, Literal] = {}
    for _, lit in kb.facts:
        facts.setdefault(lit.render(), lit)
    for lit in facts.values():
        verdict = _verdict_for(goal, lit)
        if verdict is not None:
            return ProofTrace((), verdict, 0, budget, "forward")

    exhausted = False
    changed = True
    while changed and not exhausted:
        changed = False
        for index, rule in kb.rules:
            snapshot = list(facts.values())
            for unifier in _body_matches(rule.body, snapshot, EMPTY_SUBSTITUTION):
                head_inst = rule.head.apply(unifier)
                if not head_inst.is_ground():
                    continue
                key = head_inst.render()
                if key in facts:
                    continue
                if used >= budget:
                    exhausted = True
                    break
                used += 1
                step = ReasoningStep(
                    root,
                    LogicStatement(head_inst.as_formula(), _premise_span(ctx, index)),
                    RuleApplication(rule, unifier),
                    verified=False,
                )
                if not verify_step(step, ctx, oracle):
                    continue
                steps.append(replace(step, verified=True))
                facts[key] = head_inst
                changed = True
                verdict = _verdict_for(goal, head_inst)
                if verdict is not None:
                    return ProofTrace(tuple(steps), verdict, used, budget, "forward")
            if exhausted:
                break

    if not exhausted and oracle is not None and (goal is None or kb.has_oracle_material):
        return _oracle_prove(
            ctx, budget, oracle, "forward", tuple(steps), budget_used=used
        )
    return ProofTrace(tuple(steps), Verdict.UNKNOWN, used, budget, "forward")
