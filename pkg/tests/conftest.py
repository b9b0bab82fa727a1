from __future__ import annotations

import random

import pytest

from hblr.fol import (
    And,
    Atom,
    Constant,
    Exists,
    ForAll,
    Function,
    Iff,
    Implies,
    Not,
    Or,
    Variable,
)
from hblr.harness import ProblemInstance
from hblr.oracle import OracleClient, OracleTask, ScriptedOracleBackend
from hblr.translation import (
    OfflineVerifier,
    SentenceSpan,
    TemplateTranslationBackend,
    TranslationMode,
    TranslationPipeline,
    build_hybrid_context,
)


@pytest.fixture
def pipeline() -> TranslationPipeline:
    return TranslationPipeline(TemplateTranslationBackend(), OfflineVerifier())


def make_context(
    premises: list[str],
    conclusion: str,
    pipeline: TranslationPipeline,
    mode: TranslationMode = TranslationMode.SELECTIVE,
):
    spans = [SentenceSpan(text, i) for i, text in enumerate(premises)]
    return build_hybrid_context(
        spans, SentenceSpan(conclusion, 0, "conclusion"), mode, pipeline
    )


def instance_context(
    instance: ProblemInstance,
    pipeline: TranslationPipeline,
    mode: TranslationMode = TranslationMode.SELECTIVE,
):
    return make_context(list(instance.premises), instance.conclusion, pipeline, mode)


def scripted_oracle(
    scripts: dict | None = None, defaults: dict | None = None
) -> tuple[OracleClient, ScriptedOracleBackend]:
    """Stub-backed client; verification confirms unless scripted otherwise."""
    merged_defaults = {OracleTask.VERIFY_STEP: "VERDICT: valid"}
    merged_defaults.update(defaults or {})
    backend = ScriptedOracleBackend(defaults=merged_defaults)
    for (task, focus), raw in (scripts or {}).items():
        backend.script_focus(task, focus, raw)
    return OracleClient(backend), backend


# ---------------------------------------------------------------------------
# random AST generation for parser/unification laws


PREDICATES = ("P", "Q", "R", "S")
CONSTANTS = ("a", "b", "c")
FUNCTIONS = ("f", "g")
VARS = ("x", "y", "z")


def random_term(rng: random.Random, bound: tuple[str, ...], depth: int = 0):
    roll = rng.random()
    if bound and roll < 0.45:
        return Variable(rng.choice(bound))
    if depth < 2 and roll < 0.65:
        name = rng.choice(FUNCTIONS)
        arity = rng.randint(1, 2)
        return Function(
            name, tuple(random_term(rng, bound, depth + 1) for _ in range(arity))
        )
    return Constant(rng.choice(CONSTANTS))


def random_atom(rng: random.Random, bound: tuple[str, ...] = ()) -> Atom:
    arity = rng.randint(0, 2)
    return Atom(
        rng.choice(PREDICATES),
        tuple(random_term(rng, bound) for _ in range(arity)),
    )


def random_formula(rng: random.Random, depth: int = 0, bound: tuple[str, ...] = ()):
    if depth >= 4 or rng.random() < 0.3:
        return random_atom(rng, bound)
    kind = rng.choice(("not", "and", "or", "implies", "iff", "forall", "exists"))
    if kind == "not":
        return Not(random_formula(rng, depth + 1, bound))
    if kind in ("and", "or", "implies", "iff"):
        node = {"and": And, "or": Or, "implies": Implies, "iff": Iff}[kind]
        return node(
            random_formula(rng, depth + 1, bound),
            random_formula(rng, depth + 1, bound),
        )
    var = rng.choice(VARS)  # reuse of a bound name exercises parser renaming
    node = ForAll if kind == "forall" else Exists
    return node(var, random_formula(rng, depth + 1, bound + (var,)))
