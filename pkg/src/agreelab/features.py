"""Negation-free propositional feature terms.

A feature term is an atom, a conjunction or a disjunction.  Entailment is
classical and is decided by enumerating every valuation of the joint atom
set.  The enumeration is bit-parallel: over ``n`` atoms a term's set of
models is a ``2**n``-bit integer, atom ``i`` being the bits whose index has
bit ``i`` set, and ``&``/``|`` on terms become ``&``/``|`` on those
integers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

from agreelab.syntax import ATOM_RE, ParseError, Raw, parse_raw

# Past this the 2**n enumeration stops being cheap.
MAX_ATOMS = 20


def cached_hash(self) -> int:
    """``__hash__`` for frozen dataclass trees, computed once per node."""
    h = self.__dict__.get("_hash")
    if h is None:
        h = hash((type(self).__name__,) + tuple(getattr(self, f) for f in self.__dataclass_fields__))
        object.__setattr__(self, "_hash", h)
    return h


class _TermOps:
    def __and__(self, other: FeatureTerm) -> And:
        return And(self, other)

    def __or__(self, other: FeatureTerm) -> Or:
        return Or(self, other)


@dataclass(frozen=True)
class Atom(_TermOps):
    name: str

    __hash__ = cached_hash

    def __post_init__(self):
        if not isinstance(self.name, str) or not ATOM_RE.fullmatch(self.name):
            raise ValueError(f"bad atom name {self.name!r}")

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class And(_TermOps):
    left: FeatureTerm
    right: FeatureTerm

    __hash__ = cached_hash

    def __str__(self) -> str:
        left = f"({self.left})" if isinstance(self.left, Or) else str(self.left)
        right = f"({self.right})" if isinstance(self.right, (And, Or)) else str(self.right)
        return f"{left} & {right}"


@dataclass(frozen=True)
class Or(_TermOps):
    left: FeatureTerm
    right: FeatureTerm

    __hash__ = cached_hash

    def __str__(self) -> str:
        right = f"({self.right})" if isinstance(self.right, Or) else str(self.right)
        return f"{self.left} | {right}"


FeatureTerm = Union[Atom, And, Or]
Valuation = Mapping[str, bool]


def is_term(obj) -> bool:
    return isinstance(obj, (Atom, And, Or))


def term_from_raw(raw: Raw, text: str) -> FeatureTerm:
    kind = raw[0]
    if kind == "atom":
        return Atom(raw[1])
    if kind in ("/", "\\"):
        raise ParseError(f"slash {kind!r} inside a feature term", text, raw[3])
    left, right = term_from_raw(raw[1], text), term_from_raw(raw[2], text)
    return And(left, right) if kind == "&" else Or(left, right)


def parse_term(text: str) -> FeatureTerm:
    """Parse ``np & sg & 3`` style text; ``&`` binds tighter than ``|``."""
    return term_from_raw(parse_raw(text), text)


def conjoin(terms: Iterable[FeatureTerm]) -> FeatureTerm:
    """Left-nested conjunction of a nonempty sequence of terms."""
    terms = list(terms)
    if not terms:
        raise ValueError("conjoin() needs at least one term")
    out = terms[0]
    for t in terms[1:]:
        out = And(out, t)
    return out


@lru_cache(maxsize=None)
def atoms(term: FeatureTerm) -> frozenset[str]:
    if isinstance(term, Atom):
        return frozenset([term.name])
    return atoms(term.left) | atoms(term.right)


def evaluate(term: FeatureTerm, valuation: Valuation) -> bool:
    if isinstance(term, Atom):
        return valuation[term.name]
    if isinstance(term, And):
        return evaluate(term.left, valuation) and evaluate(term.right, valuation)
    return evaluate(term.left, valuation) or evaluate(term.right, valuation)


def valuations(names: Iterable[str]) -> Iterator[dict[str, bool]]:
    """Every total valuation over ``names``, in a fixed order."""
    names = sorted(set(names))
    for bits in itertools.product((False, True), repeat=len(names)):
        yield dict(zip(names, bits))


@lru_cache(maxsize=None)
def _atom_mask(i: int, n: int) -> int:
    period = 1 << (i + 1)
    block = ((1 << (1 << i)) - 1) << (1 << i)
    return block * (((1 << (1 << n)) - 1) // ((1 << period) - 1))


def _models(term: FeatureTerm, index: Mapping[str, int], n: int) -> int:
    if isinstance(term, Atom):
        return _atom_mask(index[term.name], n)
    left = _models(term.left, index, n)
    right = _models(term.right, index, n)
    return left & right if isinstance(term, And) else left | right


def _universe(*terms: FeatureTerm, extra: Iterable[str] = ()) -> tuple[dict[str, int], int]:
    names = sorted(set().union(*(atoms(t) for t in terms), extra))
    if len(names) > MAX_ATOMS:
        raise ValueError(f"{len(names)} atoms exceeds the enumeration limit of {MAX_ATOMS}")
    return {name: i for i, name in enumerate(names)}, len(names)


@lru_cache(maxsize=65536)
def entails(phi: FeatureTerm, psi: FeatureTerm) -> bool:
    """True iff every valuation satisfying ``phi`` satisfies ``psi``."""
    if phi == psi:
        return True
    index, n = _universe(phi, psi)
    return _models(phi, index, n) & ~_models(psi, index, n) == 0


def consistent(phi: FeatureTerm, psi: FeatureTerm) -> bool:
    """True iff some valuation satisfies both terms.

    Without negation this always holds (make every atom true); it is kept
    so consistency-based and entailment-based agreement can be compared
    through one interface.
    """
    index, n = _universe(phi, psi)
    return _models(phi, index, n) & _models(psi, index, n) != 0


def fixes(phi: FeatureTerm, chi: Atom | str) -> bool:
    """True iff all models of ``phi`` agree on the atom ``chi``."""
    name = chi.name if isinstance(chi, Atom) else chi
    index, n = _universe(phi, extra=[name])
    models = _models(phi, index, n)
    with_chi = models & _atom_mask(index[name], n)
    return with_chi == models or with_chi == 0


def fixed_atoms(phi: FeatureTerm, universe: Iterable[str] = ()) -> frozenset[str]:
    names = atoms(phi) | frozenset(universe)
    return frozenset(name for name in names if fixes(phi, name))


def equivalent(phi: FeatureTerm, psi: FeatureTerm) -> bool:
    return entails(phi, psi) and entails(psi, phi)


@lru_cache(maxsize=None)
def canonical_key(term: FeatureTerm) -> frozenset[frozenset[str]]:
    """The minimal models of ``term`` as sets of true atoms.

    Negation-free terms are monotone, so two terms are equivalent exactly
    when their minimal models coincide; the key is usable for hashing
    terms up to equivalence.
    """
    index, n = _universe(term)
    names = sorted(index)
    models = _models(term, index, n)
    minimal = []
    # ascending popcount so supersets of an accepted model are seen later
    for k in sorted(range(1 << n), key=lambda k: (bin(k).count("1"), k)):
        if not (models >> k) & 1:
            continue
        if any(k & m == m for m in minimal):
            continue
        minimal.append(k)
    return frozenset(
        frozenset(names[i] for i in range(n) if (m >> i) & 1) for m in minimal
    )


def size(term: FeatureTerm) -> int:
    """Number of connectives."""
    if isinstance(term, Atom):
        return 0
    return 1 + size(term.left) + size(term.right)
