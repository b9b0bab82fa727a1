"""Seeded generator of template-shaped reasoning chains.

Each instance carries one goal chain of the requested depth plus a number of
goal-disjoint distractor chains (one fact and one rule each, about a different
individual). Gold labels cycle True / False / Unknown; False instances either
negate the conclusion of a derivable chain or route the chain through a
negative rule. Identical arguments produce byte-identical instances.
"""

from __future__ import annotations

import random

from .dataset import ProblemInstance

_PREFIXES = (
    "wump", "tump", "zump", "gorp", "vump", "yump", "blimp", "florp", "zorp",
    "dramp", "grimp", "lerp", "morp", "nump", "quirp", "romp", "serp", "trolp",
    "velp", "dorp",
)
_SUFFIXES = ("us", "on", "in", "el", "or")
_NOUNS = tuple(f"{p}{s}" for p in _PREFIXES for s in _SUFFIXES)

_NAMES = (
    "tom", "polly", "rex", "max", "fae", "sam", "wren", "stella",
    "gus", "nina", "bob", "erin", "anne", "dave", "fiona", "charlie",
)


class InvalidParamsError(ValueError):
    pass


def _cap(word: str) -> str:
    return word[0].upper() + word[1:]


def _build_instance(
    index: int, depth: int, distractors: int, rng: random.Random, seed: int
) -> ProblemInstance:
    gold = ("True", "False", "Unknown")[index % 3]
    nouns = rng.sample(_NOUNS, k=depth + 2 + 2 * distractors)
    names = rng.sample(_NAMES, k=1 + distractors)
    chain = nouns[: depth + 1]
    spare = nouns[depth + 1]
    subject = names[0]

    premises = [f"{_cap(subject)} is a {chain[0]}."]
    rules = [f"Every {chain[i]} is a {chain[i + 1]}." for i in range(depth)]

    if gold == "True":
        conclusion = f"{_cap(subject)} is a {chain[depth]}."
    elif gold == "False":
        if depth >= 1 and rng.random() < 0.5:
            # derive the negated predicate, then claim the positive
            rules[depth - 1] = f"Every {chain[depth - 1]} is not a {chain[depth]}."
            conclusion = f"{_cap(subject)} is a {chain[depth]}."
        else:
            conclusion = f"{_cap(subject)} is not a {chain[depth]}."
    else:
        conclusion = f"{_cap(subject)} is a {spare}."

    premises.extend(rules)
    for j in range(distractors):
        left = nouns[depth + 2 + 2 * j]
        right = nouns[depth + 3 + 2 * j]
        premises.append(f"{_cap(names[1 + j])} is a {left}.")
        premises.append(f"Every {left} is a {right}.")
    rng.shuffle(premises)

    return ProblemInstance(
        id=f"syn{seed}-{index:04d}",
        premises=tuple(premises),
        conclusion=conclusion,
        gold=gold,
        depth=depth,
    )


def generate_synthetic(
    count: int, depth: int, distractors: int, seed: int
) -> list[ProblemInstance]:
    """Generate `count` instances of exactly `depth` with `distractors`
    goal-disjoint chains; fully reproducible per seed."""
    if count < 0:
        raise InvalidParamsError("count must be non-negative")
    if not 0 <= depth <= 8:
        raise InvalidParamsError("depth must be between 0 and 8")
    if distractors < 0:
        raise InvalidParamsError("distractors must be non-negative")
    rng = random.Random(seed)
    return [
        _build_instance(i, depth, distractors, rng, seed) for i in range(count)
    ]
