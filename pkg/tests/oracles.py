"""Deliberately naive reference oracles used only by the tests.

These stay independent of the engines they check: the closure oracle
saturates by enumerating constant assignments (no unification), and the model
oracle evaluates formulas over explicitly enumerated interpretations.
"""

from __future__ import annotations

from itertools import product

from hblr.fol import (
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
    Substitution,
    Variable,
    as_literal,
    substitute,
    to_horn,
)

LiteralKey = tuple[bool, str, tuple[str, ...]]


def _term_key(term) -> str:
    if isinstance(term, (Variable, Constant)):
        return term.name
    return f"{term.name}({','.join(_term_key(a) for a in term.args)})"


def _literal_key(lit) -> LiteralKey:
    return (lit.positive, lit.atom.predicate, tuple(_term_key(a) for a in lit.atom.args))


def _constants_of_term(term) -> set[str]:
    if isinstance(term, Constant):
        return {term.name}
    if isinstance(term, Function):
        out: set[str] = set()
        for arg in term.args:
            out |= _constants_of_term(arg)
        return out
    return set()


def _constants_of_formula(formula: Formula) -> set[str]:
    if isinstance(formula, Atom):
        out: set[str] = set()
        for arg in formula.args:
            out |= _constants_of_term(arg)
        return out
    if isinstance(formula, Not):
        return _constants_of_formula(formula.operand)
    if isinstance(formula, (And, Or, Implies, Iff)):
        return _constants_of_formula(formula.left) | _constants_of_formula(formula.right)
    if isinstance(formula, (ForAll, Exists)):
        return _constants_of_formula(formula.body)
    raise TypeError(formula)


def naive_closure(formulas: list[Formula]) -> set[LiteralKey]:
    """Saturate all derivable ground literals by brute-force instantiation of
    every rule over every constant assignment, to a fixpoint. Function-free."""
    facts: set[LiteralKey] = set()
    rules = []
    constants: set[str] = set()
    for formula in formulas:
        constants |= _constants_of_formula(formula)
        for rule in to_horn(formula):
            if rule.is_fact:
                facts.add(_literal_key(rule.head))
            else:
                rules.append(rule)
    domain = sorted(constants) or ["c0"]
    changed = True
    while changed:
        changed = False
        for rule in rules:
            names = rule.universals
            for combo in product(domain, repeat=len(names)):
                theta = Substitution(
                    {name: Constant(value) for name, value in zip(names, combo)}
                )
                if all(_literal_key(lit.apply(theta)) in facts for lit in rule.body):
                    head_key = _literal_key(rule.head.apply(theta))
                    if head_key not in facts:
                        facts.add(head_key)
                        changed = True
    return facts


def closure_verdict(premises: list[Formula], conclusion: Formula) -> str:
    """Three-valued verdict from the saturated closure."""
    lit = as_literal(conclusion)
    if lit is None:
        return "Unknown"
    closure = naive_closure(premises)
    key = _literal_key(lit)
    if key in closure:
        return "True"
    if _literal_key(lit.negated()) in closure:
        return "False"
    return "Unknown"


def atom_universe(predicates: dict[str, int], domain: list[str]) -> list[tuple[str, tuple[str, ...]]]:
    atoms = []
    for predicate, arity in sorted(predicates.items()):
        for combo in product(domain, repeat=arity):
            atoms.append((predicate, combo))
    return atoms


def eval_formula(formula: Formula, truth: set, env: dict[str, str], domain: list[str]) -> bool:
    """Evaluate under an interpretation given as the set of true ground atoms."""
    if isinstance(formula, Atom):
        args = []
        for arg in formula.args:
            if isinstance(arg, Variable):
                args.append(env[arg.name])
            elif isinstance(arg, Constant):
                args.append(arg.name)
            else:
                raise ValueError("model oracle is function-free")
        return (formula.predicate, tuple(args)) in truth
    if isinstance(formula, Not):
        return not eval_formula(formula.operand, truth, env, domain)
    if isinstance(formula, And):
        return eval_formula(formula.left, truth, env, domain) and eval_formula(
            formula.right, truth, env, domain
        )
    if isinstance(formula, Or):
        return eval_formula(formula.left, truth, env, domain) or eval_formula(
            formula.right, truth, env, domain
        )
    if isinstance(formula, Implies):
        return (not eval_formula(formula.left, truth, env, domain)) or eval_formula(
            formula.right, truth, env, domain
        )
    if isinstance(formula, Iff):
        return eval_formula(formula.left, truth, env, domain) == eval_formula(
            formula.right, truth, env, domain
        )
    if isinstance(formula, ForAll):
        return all(
            eval_formula(formula.body, truth, {**env, formula.var: value}, domain)
            for value in domain
        )
    if isinstance(formula, Exists):
        return any(
            eval_formula(formula.body, truth, {**env, formula.var: value}, domain)
            for value in domain
        )
    raise TypeError(formula)


def all_models(formulas: list[Formula], predicates: dict[str, int], domain: list[str]):
    """Every interpretation (set of true ground atoms) satisfying all formulas."""
    universe = atom_universe(predicates, domain)
    for bits in product((False, True), repeat=len(universe)):
        truth = {atom for atom, bit in zip(universe, bits) if bit}
        if all(eval_formula(f, truth, {}, domain) for f in formulas):
            yield truth


def ground_terms(max_depth: int) -> list:
    """Small ground-term universe over constants a,b and unary function f."""
    terms = [Constant("a"), Constant("b")]
    frontier = list(terms)
    for _ in range(max_depth):
        frontier = [Function("f", (t,)) for t in frontier]
        terms.extend(frontier)
    return terms


def ground_unifiers(a: Atom, b: Atom, terms) -> list[dict]:
    """Every ground substitution over `terms` equating the two atoms."""
    from hblr.fol import free_variables

    names = sorted(free_variables(a) | free_variables(b))
    unifiers = []
    for combo in product(terms, repeat=len(names)):
        theta = Substitution(dict(zip(names, combo)))
        if substitute(a, theta) == substitute(b, theta):
            unifiers.append(dict(zip(names, combo)))
    return unifiers
