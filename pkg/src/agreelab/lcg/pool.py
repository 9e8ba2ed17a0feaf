"""Finite candidate set for the coordination target.

The coordination rule quantifies over every category; search only tries
the categories a sentence's own lexical material suggests.  Feature terms:
the Atomic terms of the lexical categories closed once under pairwise
``&`` and ``|``.  Categories: the subcategories of the lexical categories,
plus each of those with one Atomic argument replaced by a pool term.
Both are deduplicated up to logical equivalence, keeping the first form
seen, so a lexical term keeps its own spelling.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from agreelab import features
from agreelab.features import FeatureTerm
from agreelab.lcg import categories as cats
from agreelab.lcg.categories import Atomic, Category


def _dedup(items: Iterable, key) -> tuple:
    seen = set()
    out = []
    for it in items:
        k = key(it)
        if k not in seen:
            seen.add(k)
            out.append(it)
    return tuple(out)


@dataclass(frozen=True)
class CandidatePool:
    terms: tuple[FeatureTerm, ...] = ()
    categories: tuple[Category, ...] = ()
    targets: tuple[Category, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        merged = _dedup(
            itertools.chain(self.categories, (Atomic(t) for t in self.terms)),
            cats.canonical_key,
        )
        object.__setattr__(self, "targets", merged)

    def has_term(self, term: FeatureTerm) -> bool:
        return any(features.equivalent(term, t) for t in self.terms)

    def has_category(self, cat: Category) -> bool:
        return any(cats.equivalent(cat, c) for c in self.categories)

    def __len__(self) -> int:
        return len(self.targets)


EMPTY_POOL = CandidatePool()


def build_pool(lexical_categories: Sequence[Category]) -> CandidatePool:
    lexical = [c for c in lexical_categories if cats.is_category(c)]
    base = _dedup(
        (t for c in lexical for t in cats.atomic_terms(c)), features.canonical_key
    )
    closure = list(base)
    for a, b in itertools.combinations(base, 2):
        closure.append(features.And(a, b))
        closure.append(features.Or(a, b))
    terms = _dedup(closure, features.canonical_key)

    subs = _dedup((s for c in lexical for s in cats.subcategories(c)), cats.canonical_key)
    replaced = [r for s in subs for t in terms for r in cats.argument_replacements(s, t)]
    categories = _dedup(itertools.chain(subs, replaced), cats.canonical_key)
    return CandidatePool(terms, categories)
