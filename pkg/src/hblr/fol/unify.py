"""Robinson unification over atoms, occurs check enabled."""

from __future__ import annotations

from .substitution import Substitution
from .syntax import Atom, Constant, Function, Term, Variable, print_term, term_variables


class UnifyError(Exception):
    """The two atoms have no unifier; `reason` says why."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def _bind(bindings: dict[str, Term], name: str, term: Term) -> None:
    if name in term_variables(term):
        raise UnifyError(f"occurs check: {name} in {print_term(term)}")
    one = Substitution({name: term})
    for key in list(bindings):
        bindings[key] = one.apply_to_term(bindings[key])
    bindings[name] = term


def unify(a: Atom, b: Atom) -> Substitution:
    """Most general unifier of two atoms, or raise UnifyError.

    The result is idempotent and makes both atoms syntactically equal.
    """
    if a.predicate != b.predicate:
        raise UnifyError(f"predicate clash: {a.predicate} vs {b.predicate}")
    if len(a.args) != len(b.args):
        raise UnifyError(
            f"arity mismatch for {a.predicate}: {len(a.args)} vs {len(b.args)}"
        )
    bindings: dict[str, Term] = {}
    pending: list[tuple[Term, Term]] = list(zip(a.args, b.args))
    while pending:
        s, t = pending.pop()
        current = Substitution(bindings)
        s = current.apply_to_term(s)
        t = current.apply_to_term(t)
        if s == t:
            continue
        if isinstance(s, Variable):
            _bind(bindings, s.name, t)
        elif isinstance(t, Variable):
            _bind(bindings, t.name, s)
        elif isinstance(s, Function) and isinstance(t, Function):
            if s.name != t.name:
                raise UnifyError(f"function clash: {s.name} vs {t.name}")
            if len(s.args) != len(t.args):
                raise UnifyError(f"arity mismatch for function {s.name}")
            pending.extend(zip(s.args, t.args))
        elif isinstance(s, Constant) and isinstance(t, Constant):
            raise UnifyError(f"constant clash: {s.name} vs {t.name}")
        else:
            raise UnifyError(f"term clash: {print_term(s)} vs {print_term(t)}")
    return Substitution(bindings)


def try_unify(a: Atom, b: Atom) -> Substitution | None:
    try:
        return unify(a, b)
    except UnifyError:
        return None
