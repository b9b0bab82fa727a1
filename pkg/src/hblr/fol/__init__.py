"""First-order logic core: AST, parsing, printing, substitution, unification,
Horn compilation, and ground literal complements."""

from .horn import (
    HornRule,
    Literal,
    NonLiteralError,
    NotHornable,
    as_literal,
    ground_complement,
    to_horn,
)
from .parser import FormulaSyntaxError, parse_formula
from .substitution import EMPTY_SUBSTITUTION, Substitution, substitute
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
    alpha_equivalent,
    formula_variables,
    free_variables,
    is_closed,
    print_formula,
    print_term,
    term_variables,
)
from .unify import UnifyError, try_unify, unify

__all__ = [
    "And",
    "Atom",
    "Constant",
    "EMPTY_SUBSTITUTION",
    "Exists",
    "ForAll",
    "Formula",
    "FormulaSyntaxError",
    "Function",
    "HornRule",
    "Iff",
    "Implies",
    "Literal",
    "NonLiteralError",
    "Not",
    "NotHornable",
    "Or",
    "Substitution",
    "Term",
    "UnifyError",
    "Variable",
    "alpha_equivalent",
    "as_literal",
    "formula_variables",
    "free_variables",
    "ground_complement",
    "is_closed",
    "parse_formula",
    "print_formula",
    "print_term",
    "substitute",
    "term_variables",
    "to_horn",
    "try_unify",
    "unify",
]
