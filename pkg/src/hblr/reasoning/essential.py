"""Essential-step marking: walk the dependency structure backward from the
verdict-producing step; whatever the walk never reaches was extraneous."""

from __future__ import annotations

from ..fol import as_literal
from ..translation import LogicStatement
from .trace import (
    ContradictionWith,
    OracleStep,
    PremiseMatch,
    ProofTrace,
    RuleApplication,
    Verdict,
)


def _mark_backward(trace: ProofTrace) -> tuple[bool, ...]:
    steps = trace.steps
    closing = [
        i
        for i, s in enumerate(steps)
        if isinstance(s.justification, (PremiseMatch, ContradictionWith))
    ]
    if isinstance(steps[-1].justification, OracleStep):
        closing.append(len(steps) - 1)
    by_hypothesis: dict[int, list[int]] = {}
    for i, s in enumerate(steps):
        by_hypothesis.setdefault(id(s.from_hypothesis), []).append(i)
    essential: set[int] = set()
    for closer in closing:
        node = steps[closer].from_hypothesis
        while node is not None:
            essential.update(by_hypothesis.get(id(node), ()))
            node = node.parent
    return tuple(i in essential for i in range(len(steps)))


def _mark_forward(trace: ProofTrace) -> tuple[bool, ...]:
    steps = trace.steps
    derived_by: dict[str, int] = {}
    for i, s in enumerate(steps):
        if isinstance(s.justification, RuleApplication) and isinstance(
            s.derived, LogicStatement
        ):
            lit = as_literal(s.derived.formula)
            if lit is not None:
                derived_by.setdefault(lit.render(), i)
    essential: set[int] = set()
    work = [len(steps) - 1]  # the engine stops on the deciding derivation
    while work:
        i = work.pop()
        if i in essential:
            continue
        essential.add(i)
        justification = steps[i].justification
        if isinstance(justification, RuleApplication):
            for lit in justification.rule.body:
                instance = lit.apply(justification.unifier)
                dep = derived_by.get(instance.render())
                if dep is not None and dep < i:
                    work.append(dep)
        elif isinstance(justification, OracleStep):
            if i > 0 and isinstance(steps[i - 1].justification, OracleStep):
                work.append(i - 1)
    return tuple(i in essential for i in range(len(steps)))


def mark_essential(trace: ProofTrace) -> ProofTrace:
    """Return the trace with per-step essential marks filled in."""
    if trace.essential_marks is not None:
        return trace
    if trace.verdict is Verdict.UNKNOWN or not trace.steps:
        return trace.with_marks((False,) * len(trace.steps))
    if trace.strategy == "forward":
        return trace.with_marks(_mark_forward(trace))
    return trace.with_marks(_mark_backward(trace))
