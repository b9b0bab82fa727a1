"""Hypothesis-driven backward chaining over a hybrid context.

The loop mirrors goal-directed deduction: a symbolic hypothesis is checked
against premise facts, then against rules whose heads unify with it, with
rule bodies proved depth-first left-to-right under a shared substitution.
A text hypothesis delegates single steps to the oracle, whose answers are
supports / contradicts / refine. Every admitted step is verified first;
a failed step is discarded and the next candidate is tried. The search stops
at True (hypothesis entailed), False (complement entailed), or Unknown
(budget exhausted or no applicable step).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from ..fol import EMPTY_SUBSTITUTION, Literal, Substitution, try_unify
from ..translation import (
    HybridContext,
    LogicStatement,
    SentenceSpan,
    TextStatement,
    statement_text,
)
from .kb import (
    SymbolicKB,
    body_instance_formula,
    compile_context,
    conclusion_literal,
    derived_hypothesis_span,
    digest,
    render_premises,
    standardize_apart,
)
from .trace import (
    ContradictionWith,
    Hypothesis,
    OracleStep,
    PremiseMatch,
    ProofTrace,
    ReasoningStep,
    RuleApplication,
    Verdict,
)
from .verify import verify_step


class MalformedContextError(ValueError):
    pass


class _OutOfSteps(Exception):
    pass


@dataclass
class _Budget:
    limit: int
    used: int = 0

    def consume(self) -> None:
        if self.used >= self.limit:
            raise _OutOfSteps()
        self.used += 1


def _origin_span(ctx: HybridContext) -> SentenceSpan:
    conclusion = ctx.conclusion
    if isinstance(conclusion, LogicStatement):
        return conclusion.origin
    return conclusion.span


def _premise_span(ctx: HybridContext, index: int) -> SentenceSpan:
    statement = ctx.premises[index]
    if isinstance(statement, LogicStatement):
        return statement.origin
    return statement.span


class _BackwardEngine:
    def __init__(self, ctx: HybridContext, kb: SymbolicKB, budget: _Budget, oracle):
        self.ctx = ctx
        self.kb = kb
        self.budget = budget
        self.oracle = oracle
        self.steps: list[ReasoningStep] = []
        self._fresh = 0

    def _admit(self, step: ReasoningStep) -> bool:
        if not verify_step(step, self.ctx, self.oracle):
            return False
        self.steps.append(replace(step, verified=True))
        return True

    def _rule_candidates(self, goal: Literal) -> list[tuple[int, object]]:
        matching = [
            (len(rule.body), index, rule)
            for index, rule in self.kb.rules
            if rule.head.positive == goal.positive
            and rule.head.atom.predicate == goal.atom.predicate
            and len(rule.head.atom.args) == len(goal.atom.args)
        ]
        matching.sort(key=lambda item: (item[0], item[1]))
        return [(index, rule) for _, index, rule in matching]

    def prove(self, goal: Literal, hypothesis: Hypothesis, path: frozenset[str]):
        """Return a substitution proving `goal`, or None; consumes budget."""
        key = goal.render()
        if key in path:
            return None
        path = path | {key}

        for index, fact in self.kb.facts:
            if fact.positive != goal.positive:
                continue
            unifier = try_unify(goal.atom, fact.atom)
            if unifier is None:
                continue
            self.budget.consume()
            step = ReasoningStep(
                hypothesis,
                LogicStatement(fact.as_formula(), _premise_span(self.ctx, index)),
                PremiseMatch(index),
                verified=False,
            )
            if self._admit(step):
                return unifier
            self.budget.consume()  # discarded candidate costs a backtrack

        origin = _origin_span(self.ctx)
        for index, rule in self._rule_candidates(goal):
            self._fresh += 1
            fresh = standardize_apart(rule, self._fresh)
            unifier = try_unify(fresh.head.atom, goal.atom)
            if unifier is None:
                continue
            self.budget.consume()
            subgoals = tuple(lit.apply(unifier) for lit in fresh.body)
            justification = RuleApplication(fresh, unifier)
            derived = LogicStatement(
                body_instance_formula(fresh, unifier), _premise_span(self.ctx, index)
            )
            mark = len(self.steps)
            step = ReasoningStep(hypothesis, derived, justification, verified=False)
            if not self._admit(step):
                self.budget.consume()
                continue
            accumulated = EMPTY_SUBSTITUTION
            proved_all = True
            for subgoal in subgoals:
                instance = subgoal.apply(accumulated)
                child = Hypothesis(
                    LogicStatement(instance.as_formula(), origin),
                    hypothesis.depth + 1,
                    hypothesis,
                )
                bindings = self.prove(instance, child, path)
                if bindings is None:
                    proved_all = False
                    break
                accumulated = accumulated.compose(bindings)
            if proved_all:
                return unifier.compose(accumulated)
            del self.steps[mark:]  # subtree failed: discard its steps
            self.budget.consume()
        return None

    def prove_complement(self, goal: Literal, root: Hypothesis) -> bool:
        complement = goal.negated()
        # direct contradiction with a premise
        for index, fact in self.kb.facts:
            if fact.positive != complement.positive:
                continue
            if try_unify(complement.atom, fact.atom) is None:
                continue
            self.budget.consume()
            step = ReasoningStep(
                root,
                LogicStatement(fact.as_formula(), _premise_span(self.ctx, index)),
                ContradictionWith(index),
                verified=False,
            )
            if self._admit(step):
                return True
            self.budget.consume()
        # complement derived through rules
        child = Hypothesis(
            LogicStatement(complement.as_formula(), _origin_span(self.ctx)), 1, root
        )
        return self.prove(complement, child, frozenset()) is not None


def _oracle_prove(
    ctx: HybridContext,
    budget: int,
    oracle,
    strategy: str,
    initial_steps: tuple[ReasoningStep, ...] = (),
    budget_used: int = 0,
) -> ProofTrace:
    """Algorithm loop for text (or non-literal) hypotheses: each iteration asks
    the oracle for one step and verifies it before extending the lineage."""
    from ..oracle import OracleRequest, OracleTask, TransportError

    steps = list(initial_steps)
    used = budget_used
    if oracle is None:
        return ProofTrace(tuple(steps), Verdict.UNKNOWN, used, budget, strategy)
    root = Hypothesis(ctx.conclusion, 0, None)
    current = root
    premise_listing = render_premises(ctx)
    origin = _origin_span(ctx)
    while used < budget:
        used += 1
        payload = {
            "premises": premise_listing,
            "hypothesis": statement_text(current.statement),
        }
        prompt_digest = digest(json.dumps(payload, sort_keys=True))
        try:
            response = oracle.query(OracleRequest(OracleTask.REASON_STEP, payload))
        except TransportError as exc:
            steps.append(
                ReasoningStep(
                    current,
                    current.statement,
                    OracleStep(prompt_digest, digest(str(exc))),
                    verified=False,
                )
            )
            break
        if response.malformed:
            steps.append(
                ReasoningStep(
                    current,
                    current.statement,
                    OracleStep(prompt_digest, digest(response.raw)),
                    verified=False,
                )
            )
            break
        answer = response.answer
        if answer.relation == "refine":
            derived = TextStatement(derived_hypothesis_span(origin, answer.statement))
        else:
            derived = current.statement
        step = ReasoningStep(
            current, derived, OracleStep(prompt_digest, digest(response.raw)), verified=False
        )
        if not verify_step(step, ctx, oracle):
            break  # the oracle offered no alternative candidate for this hypothesis
        steps.append(replace(step, verified=True))
        if answer.relation == "supports":
            return ProofTrace(tuple(steps), Verdict.TRUE, used, budget, strategy)
        if answer.relation == "contradicts":
            return ProofTrace(tuple(steps), Verdict.FALSE, used, budget, strategy)
        current = Hypothesis(derived, current.depth + 1, current)
    return ProofTrace(tuple(steps), Verdict.UNKNOWN, used, budget, strategy)


def backward_prove(ctx: HybridContext, budget: int = 20, oracle=None) -> ProofTrace:
    """Prove the conclusion hypothesis-first; never runs more than `budget` steps."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    if not isinstance(ctx, HybridContext) or not ctx.premises:
        raise MalformedContextError("context must carry at least one premise")
    goal = conclusion_literal(ctx)
    if goal is None:
        return _oracle_prove(ctx, budget, oracle, "backward")
    kb = compile_context(ctx)
    tracker = _Budget(budget)
    engine = _BackwardEngine(ctx, kb, tracker, oracle)
    root = Hypothesis(ctx.conclusion, 0, None)
    try:
        if engine.prove(goal, root, frozenset()) is not None:
            return ProofTrace(
                tuple(engine.steps), Verdict.TRUE, tracker.used, budget, "backward"
            )
        engine.steps.clear()
        if goal.is_ground() and engine.prove_complement(goal, root):
            return ProofTrace(
                tuple(engine.steps), Verdict.FALSE, tracker.used, budget, "backward"
            )
        engine.steps.clear()
    except _OutOfSteps:
        return ProofTrace(
            tuple(engine.steps), Verdict.UNKNOWN, tracker.used, budget, "backward"
        )
    return ProofTrace((), Verdict.UNKNOWN, tracker.used, budget, "backward")
