"""Step verification: every reasoning step is rechecked before it may extend
the lineage. Symbolic steps are recomputed; oracle steps are re-queried once."""

from __future__ import annotations

from ..fol import Literal, as_literal, substitute, try_unify
from ..translation import HybridContext, LogicStatement, statement_text
from .kb import body_instance_formula, premise_fact_literals, render_premises
from .trace import (
    ContradictionWith,
    OracleStep,
    PremiseMatch,
    ReasoningStep,
    RuleApplication,
)


def _statement_literal(statement) -> Literal | None:
    if isinstance(statement, LogicStatement):
        return as_literal(statement.formula)
    return None


def _check_rule_application(step: ReasoningStep) -> bool:
    justification = step.justification
    assert isinstance(justification, RuleApplication)
    rule = justification.rule
    unifier = justification.unifier
    head_inst = rule.head.apply(unifier)

    # goal-directed use: the unifier must actually equate the rule head with
    # the hypothesis atom, and the derived statement must be the instantiated
    # body
    hyp_lit = _statement_literal(step.from_hypothesis.statement)
    if hyp_lit is not None and hyp_lit.positive == rule.head.positive:
        if try_unify(rule.head.atom, hyp_lit.atom) is not None:
            goal_inst = substitute(hyp_lit.atom, unifier)
            if substitute(rule.head.atom, unifier) == goal_inst:
                if not rule.body:
                    return True
                expected = body_instance_formula(rule, unifier)
                if (
                    isinstance(step.derived, LogicStatement)
                    and step.derived.formula == expected
                ):
                    return True

    # data-driven use: the unifier grounds the body and the derived statement
    # is the instantiated head
    derived_lit = _statement_literal(step.derived)
    if derived_lit is not None and derived_lit == head_inst:
        if all(lit.apply(unifier).is_ground() for lit in rule.body):
            return True
    return False


def _check_premise_match(step: ReasoningStep, ctx: HybridContext, *, complement: bool) -> bool:
    justification = step.justification
    index = justification.premise_index
    if not 0 <= index < len(ctx.premises):
        return False
    hyp_lit = _statement_literal(step.from_hypothesis.statement)
    if hyp_lit is None:
        return False
    for fact in premise_fact_literals(ctx.premises[index]):
        sign_ok = (
            fact.positive != hyp_lit.positive
            if complement
            else fact.positive == hyp_lit.positive
        )
        if sign_ok and try_unify(fact.atom, hyp_lit.atom) is not None:
            return True
    return False


def _check_oracle_step(step: ReasoningStep, ctx: HybridContext, oracle) -> bool:
    from ..oracle import OracleRequest, OracleTask, TransportError

    if oracle is None:
        return False
    request = OracleRequest(
        OracleTask.VERIFY_STEP,
        {
            "premises": render_premises(ctx),
            "hypothesis": statement_text(step.from_hypothesis.statement),
            "derived": statement_text(step.derived),
        },
    )
    try:
        response = oracle.query(request)
    except TransportError:
        return False
    if response.malformed:
        return False
    return bool(response.answer.valid)


def verify_step(step: ReasoningStep, ctx: HybridContext, oracle=None) -> bool:
    """Recheck one step; False tells the engine to discard it and move to the
    next candidate (one reconstruction attempt per step)."""
    justification = step.justification
    if isinstance(justification, RuleApplication):
        return _check_rule_application(step)
    if isinstance(justification, PremiseMatch):
        return _check_premise_match(step, ctx, complement=False)
    if isinstance(justification, ContradictionWith):
        return _check_premise_match(step, ctx, complement=True)
    if isinstance(justification, OracleStep):
        return _check_oracle_step(step, ctx, oracle)
    raise TypeError(f"unknown justification: {justification!r}")
