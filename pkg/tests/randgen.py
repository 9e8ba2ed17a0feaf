"""Seeded random generators shared by the property and acceptance tests."""

from __future__ import annotations

import itertools
import random
from typing import Optional

from agreelab.avm import FeatureStructure
from agreelab.features import And, Atom, FeatureTerm, Or, atoms, evaluate
from agreelab.lcg.categories import Atomic, Category, Over, Under, connectives

ATOMS6 = tuple("abcdef")
ATOMS3 = ("a", "b", "c")


def term(rng: random.Random, names=ATOMS6, depth: int = 3) -> FeatureTerm:
    if depth <= 0 or rng.random() < 0.3:
        return Atom(rng.choice(names))
    op = And if rng.random() < 0.5 else Or
    return op(term(rng, names, depth - 1), term(rng, names, depth - 1))


def truth_table_entails(phi: FeatureTerm, psi: FeatureTerm) -> bool:
    """Plain enumeration of assignments as dicts; shares nothing with the bitmask code."""
    names = sorted(atoms(phi) | atoms(psi))
    for bits in itertools.product((False, True), repeat=len(names)):
        v = dict(zip(names, bits))
        if _eval(phi, v) and not _eval(psi, v):
            return False
    return True


def _eval(t: FeatureTerm, v: dict) -> bool:
    if isinstance(t, Atom):
        return v[t.name]
    if isinstance(t, And):
        return _eval(t.left, v) and _eval(t.right, v)
    return _eval(t.left, v) or _eval(t.right, v)


def models(t: FeatureTerm, names) -> list[dict]:
    out = []
    for bits in itertools.product((False, True), repeat=len(names)):
        v = dict(zip(names, bits))
        if evaluate(t, v):
            out.append(v)
    return out


def fixed_by_enumeration(t: FeatureTerm, names) -> frozenset[str]:
    ms = models(t, names)
    return frozenset(n for n in names if len({m[n] for m in ms}) == 1)


# -- categories ---------------------------------------------------------------


def small_term(rng: random.Random, names=ATOMS3) -> FeatureTerm:
    r = rng.random()
    if r < 0.55:
        return Atom(rng.choice(names))
    a, b = rng.sample(names, 2)
    return And(Atom(a), Atom(b)) if r < 0.8 else Or(Atom(a), Atom(b))


def category(rng: random.Random, budget: int = 4, names=ATOMS3) -> Category:
    """A category with at most ``budget`` connectives (slashes plus feature connectives)."""
    while True:
        cat = _category(rng, rng.randint(0, 2), names)
        if connectives(cat) <= budget:
            return cat


def _category(rng, slashes, names):
    if slashes == 0:
        return Atomic(small_term(rng, names))
    left = rng.randint(0, slashes - 1)
    ctor = Over if rng.random() < 0.5 else Under
    return ctor(_category(rng, left, names), _category(rng, slashes - 1 - left, names))


def strengthen(rng: random.Random, t: FeatureTerm, names=ATOMS3) -> FeatureTerm:
    """A term entailing ``t``."""
    r = rng.random()
    if r < 0.4:
        return t
    if r < 0.8:
        return And(t, Atom(rng.choice(names)))
    if isinstance(t, Or):
        return rng.choice((t.left, t.right))
    return And(Atom(rng.choice(names)), t)


def weaken(rng: random.Random, t: FeatureTerm, names=ATOMS3) -> FeatureTerm:
    """A term entailed by ``t``."""
    r = rng.random()
    if r < 0.5:
        return Or(t, Atom(rng.choice(names)))
    if isinstance(t, And):
        return rng.choice((t.left, t.right))
    return Or(Atom(rng.choice(names)), t)


def provable(rng: random.Random, goal: Category, expansions: int = 2) -> list[Category]:
    """An antecedent that derives ``goal`` by construction.

    Starts from the identity ``goal => goal`` and repeatedly replaces an
    item X by ``X/Y, G`` or ``G, X\\Y`` where G derives Y (inverse left
    rules), or an Atomic item by a stronger one (Ax is transitive).
    """
    items: list[Category] = [goal]
    for _ in range(expansions):
        i = rng.randrange(len(items))
        x = items[i]
        if isinstance(x, Atomic) and rng.random() < 0.3:
            items[i] = Atomic(strengthen(rng, x.term))
            continue
        y = Atomic(small_term(rng))
        sub = [Atomic(strengthen(rng, y.term))]
        if rng.random() < 0.5:
            items[i:i + 1] = [Over(x, y), *sub]
        else:
            items[i:i + 1] = [*sub, Under(x, y)]
    return items


def cut_instance(rng: random.Random) -> tuple[list[Category], list[Category], int, Category]:
    """(gamma, delta, i, b): gamma should derive delta[i] and delta should derive b."""
    a = category(rng, 3)
    kind = rng.random()
    if kind < 0.5:
        gamma = provable(rng, a, rng.randint(0, 2))
    else:
        # type raising and friends, found by search rather than construction
        gamma = [category(rng, 2)]
    b = Atomic(small_term(rng))
    if rng.random() < 0.5:
        delta = [a, Under(b, a)]
        i = 0
    else:
        delta = [Over(b, a), a]
        i = 1
    if rng.random() < 0.5:
        # grow the context around the cut formula
        j = 1 - i
        pieces = provable(rng, delta[j], 1)
        delta = pieces + [a] if i == 1 else [a] + pieces
        i = len(pieces) if i == 1 else 0
    return gamma, delta, i, b


# -- feature structures ---------------------------------------------------------

ATTRS = ("a", "b", "c", "d")
VALUES = ("+", "-")


def flat_fs(rng: random.Random, attrs=ATTRS, values=VALUES) -> FeatureStructure:
    return FeatureStructure({k: rng.choice(values) for k in attrs if rng.random() < 0.6})


def all_flat(attrs=ATTRS, values=VALUES) -> list[FeatureStructure]:
    out = []
    for choice in itertools.product((None, *values), repeat=len(attrs)):
        out.append(FeatureStructure({k: v for k, v in zip(attrs, choice) if v is not None}))
    return out


def encode(fs: FeatureStructure) -> FeatureTerm:
    """Conjunction of ``attr_value`` atoms plus a constant atom for the empty structure."""
    out: Optional[FeatureTerm] = Atom("top")
    for k in sorted(fs):
        v = fs[k]
        if isinstance(v, FeatureStructure):
            raise ValueError("encode takes flat structures")
        out = And(out, Atom(f"{k}_{'plus' if v == '+' else 'minus'}"))
    return out
