"""Categories over feature terms, and the items that make up a sequent.

``X/Y`` (:class:`Over`) looks for ``Y`` on its right and ``X\\Y``
(:class:`Under`) looks for ``Y`` on its LEFT, both yielding ``X``.  This is
the argument-last orientation: the premises ``B`` and ``A\\B``, in that
order, combine to ``A``.  It is the reverse of Lambek's original notation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from agreelab import features
from agreelab.features import FeatureTerm, cached_hash
from agreelab.syntax import ParseError, Raw, parse_raw


@dataclass(frozen=True)
class Atomic:
    term: FeatureTerm

    __hash__ = cached_hash

    def __post_init__(self):
        if not features.is_term(self.term):
            raise TypeError(f"Atomic wraps a FeatureTerm, got {self.term!r}")

    def __str__(self) -> str:
        return str(self.term)


@dataclass(frozen=True)
class Over:
    result: Category
    arg: Category

    __hash__ = cached_hash

    def __str__(self) -> str:
        return f"{_wrap(self.result)}/{_wrap(self.arg)}"


@dataclass(frozen=True)
class Under:
    result: Category
    arg: Category

    __hash__ = cached_hash

    def __str__(self) -> str:
        return f"{_wrap(self.result)}\\{_wrap(self.arg)}"


Category = Union[Atomic, Over, Under]


@dataclass(frozen=True)
class Conj:
    """A coordinating word.  Only the coordination rule consumes it."""

    word: str = "and"

    __hash__ = cached_hash

    def __str__(self) -> str:
        return self.word


Item = Union[Atomic, Over, Under, Conj]


def _wrap(cat: Category) -> str:
    if isinstance(cat, Atomic) and isinstance(cat.term, features.Atom):
        return str(cat)
    return f"({cat})"


def is_category(obj) -> bool:
    return isinstance(obj, (Atomic, Over, Under))


def _from_raw(raw: Raw, text: str) -> Category:
    kind = raw[0]
    if kind == "/":
        return Over(_from_raw(raw[1], text), _from_raw(raw[2], text))
    if kind == "\\":
        return Under(_from_raw(raw[1], text), _from_raw(raw[2], text))
    return Atomic(features.term_from_raw(raw, text))


def parse_category(text: str) -> Category:
    """Parse e.g. ``(s\\np)/(np | ap)``.

    Feature connectives bind tighter than slashes and slashes associate to
    the left, so ``s\\np & sg`` is ``s\\(np & sg)`` and ``a/b/c`` is
    ``(a/b)/c``.
    """
    raw = parse_raw(text)
    try:
        return _from_raw(raw, text)
    except ParseError as exc:
        raise ParseError("feature connective applied to a slash category", text, exc.position) from None


def atomic(text: str) -> Atomic:
    return Atomic(features.parse_term(text))


def connectives(item: Item) -> int:
    """Slash count plus feature-connective count; 0 for a Conj."""
    if isinstance(item, Conj):
        return 0
    if isinstance(item, Atomic):
        return features.size(item.term)
    return 1 + connectives(item.result) + connectives(item.arg)


def slashes(item: Item) -> int:
    if isinstance(item, (Over, Under)):
        return 1 + slashes(item.result) + slashes(item.arg)
    return 0


def subcategories(cat: Category) -> Iterator[Category]:
    yield cat
    if isinstance(cat, (Over, Under)):
        yield from subcategories(cat.result)
        yield from subcategories(cat.arg)


def atomic_terms(cat: Category) -> Iterator[FeatureTerm]:
    for sub in subcategories(cat):
        if isinstance(sub, Atomic):
            yield sub.term


def argument_replacements(cat: Category, term: FeatureTerm) -> Iterator[Category]:
    """``cat`` with one Atomic argument (at any depth) replaced by ``term``."""
    if isinstance(cat, Atomic):
        return
    rebuild = type(cat)
    if isinstance(cat.arg, Atomic):
        yield rebuild(cat.result, Atomic(term))
    else:
        for arg in argument_replacements(cat.arg, term):
            yield rebuild(cat.result, arg)
    for result in argument_replacements(cat.result, term):
        yield rebuild(result, cat.arg)


def equivalent(a: Category, b: Category) -> bool:
    """Same shape with logically equivalent Atomic leaves."""
    if isinstance(a, Atomic) and isinstance(b, Atomic):
        return features.equivalent(a.term, b.term)
    if type(a) is not type(b) or isinstance(a, Atomic):
        return False
    return equivalent(a.result, b.result) and equivalent(a.arg, b.arg)


def canonical_key(cat: Category):
    if isinstance(cat, Atomic):
        return features.canonical_key(cat.term)
    return (type(cat).__name__, canonical_key(cat.result), canonical_key(cat.arg))


def format_items(items: Sequence[Item]) -> str:
    return ", ".join(str(it) for it in items)
