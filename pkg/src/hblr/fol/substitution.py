"""Idempotent variable substitutions with capture-avoiding formula application."""

from __future__ import annotations

from collections.abc import Iterator, Mapping

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
    formula_variables,
    fresh_name,
    free_variables,
    is_identifier,
    term_variables,
)


class Substitution(Mapping[str, Term]):
    """Immutable map from variable names to terms.

    No binding may map a variable to a term containing that variable; identity
    bindings are dropped at construction.
    """

    __slots__ = ("_bindings",)

    def __init__(self, bindings: Mapping[str, Term] | None = None):
        cleaned: dict[str, Term] = {}
        for name, term in (bindings or {}).items():
            if not is_identifier(name):
                raise ValueError(f"invalid variable identifier: {name!r}")
            if isinstance(term, Variable) and term.name == name:
                continue
            if name in term_variables(term):
                raise ValueError(f"binding {name} -> {term!r} fails the occurs check")
            cleaned[name] = term
        self._bindings = cleaned

    def __getitem__(self, name: str) -> Term:
        return self._bindings[name]

    def __iter__(self) -> Iterator[str]:
        return iter(self._bindings)

    def __len__(self) -> int:
        return len(self._bindings)

    def __repr__(self) -> str:
        from .syntax import print_term

        inner = ", ".join(f"{k} -> {print_term(v)}" for k, v in sorted(self._bindings.items()))
        return f"{{{inner}}}"

    def apply_to_term(self, term: Term) -> Term:
        if isinstance(term, Variable):
            return self._bindings.get(term.name, term)
        if isinstance(term, Function):
            return Function(term.name, tuple(self.apply_to_term(a) for a in term.args))
        return term

    def apply_to_formula(self, formula: Formula) -> Formula:
        if isinstance(formula, Atom):
            return Atom(formula.predicate, tuple(self.apply_to_term(a) for a in formula.args))
        if isinstance(formula, Not):
            return Not(self.apply_to_formula(formula.operand))
        if isinstance(formula, (And, Or, Implies, Iff)):
            node = type(formula)
            return node(
                self.apply_to_formula(formula.left),
                self.apply_to_formula(formula.right),
            )
        if isinstance(formula, (ForAll, Exists)):
            return self._apply_under_binder(formula)
        raise TypeError(f"not a formula: {formula!r}")

    def _apply_under_binder(self, formula: ForAll | Exists) -> Formula:
        node = type(formula)
        # the binder shadows any binding for its own name
        narrowed = {
            k: v
            for k, v in self._bindings.items()
            if k != formula.var and k in free_variables(formula.body)
        }
        incoming: set[str] = set()
        for term in narrowed.values():
            incoming |= term_variables(term)
        var = formula.var
        body = formula.body
        if var in incoming:
            # substituted terms mention the binder name: rename the binder
            taken = incoming | formula_variables(body) | set(narrowed)
            var = fresh_name(formula.var, taken)
            body = Substitution({formula.var: Variable(var)}).apply_to_formula(body)
        return node(var, Substitution(narrowed).apply_to_formula(body))

    def compose(self, later: "Substitution") -> "Substitution":
        """Substitution equivalent to applying `self` first, then `later`."""
        merged: dict[str, Term] = {
            name: later.apply_to_term(term) for name, term in self._bindings.items()
        }
        for name, term in later.items():
            if name not in self._bindings:
                merged[name] = term
        return Substitution(merged)

    def is_idempotent(self) -> bool:
        return all(self.apply_to_term(t) == t for t in self._bindings.values())


EMPTY_SUBSTITUTION = Substitution()


def substitute(formula: Formula, subst: Substitution) -> Formula:
    """Apply `subst` to `formula` without capturing bound variables."""
    return subst.apply_to_formula(formula)
