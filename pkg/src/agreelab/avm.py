"""Attribute-value feature structures and unification-based coordination.

Structures are finite maps from attribute names to either an atomic value
(a short string such as ``+``, ``-`` or ``nom``) or a nested structure.
A missing attribute means "unspecified".  ``subsumes(a, b)`` reads "a is
at least as general as b".

Sentences are analysed with a three-schema backbone::

    S  -> Subject VG Comp?     subject unified with the verb group's ``subj``
    VG -> V | V conj V ...     coordination
    Comp -> XP | XP conj XP    coordination, resolved against VG's ``comps``

A word is a verb iff its structure has a ``subj`` or ``comps`` attribute.
"""

from __future__ import annotations

import enum
import re
from collections.abc import Mapping
from functools import reduce
from typing import Iterator, Optional, Sequence, Union

from agreelab.errors import ShapeError, UnknownWordError

Value = Union[str, "FeatureStructure"]

_VALUE_RE = re.compile(r"[A-Za-z0-9_+\-]+")
_ATTR_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class FeatureStructure(Mapping):
    """Immutable, hashable attribute-value matrix."""

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries: Mapping | None = None, **kwargs):
        merged = dict(entries or {}, **kwargs)
        clean = {}
        for attr, val in merged.items():
            if isinstance(val, Mapping) and not isinstance(val, FeatureStructure):
                val = FeatureStructure(val)
            elif not isinstance(val, (str, FeatureStructure)):
                raise TypeError(f"value of {attr!r} must be a string or structure, got {val!r}")
            clean[str(attr)] = val
        self._entries = dict(sorted(clean.items()))
        self._hash = None

    def __getitem__(self, attr: str) -> Value:
        return self._entries[attr]

    def __iter__(self) -> Iterator[str]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._entries.items()))
        return self._hash

    def __eq__(self, other) -> bool:
        if isinstance(other, FeatureStructure):
            return self._entries == other._entries
        return NotImplemented

    def __repr__(self) -> str:
        return f"FeatureStructure({self})"

    def __str__(self) -> str:
        return "{" + ", ".join(f"{a}:{v}" for a, v in self._entries.items()) + "}"

    def depth(self) -> int:
        inner = [v.depth() for v in self._entries.values() if isinstance(v, FeatureStructure)]
        return 1 + max(inner, default=0)


FS = FeatureStructure
EMPTY = FeatureStructure()


def parse_fs(text: str) -> FeatureStructure:
    """Parse ``{noun:+, verb:-, comps:{noun:+}}``.  ``−`` is read as ``-``."""
    src = text.replace("−", "-")
    pos = 0

    def skip():
        nonlocal pos
        while pos < len(src) and src[pos].isspace():
            pos += 1

    def expect(ch):
        nonlocal pos
        skip()
        if pos >= len(src) or src[pos] != ch:
            raise ValueError(f"expected {ch!r} at position {pos} in {text!r}")
        pos += 1

    def structure():
        nonlocal pos
        expect("{")
        entries = {}
        skip()
        if pos < len(src) and src[pos] == "}":
            pos += 1
            return FeatureStructure()
        while True:
            skip()
            m = _ATTR_RE.match(src, pos)
            if not m:
                raise ValueError(f"expected attribute at position {pos} in {text!r}")
            attr = m.group()
            if attr in entries:
                raise ValueError(f"duplicate attribute {attr!r} in {text!r}")
            pos = m.end()
            expect(":")
            skip()
            if pos < len(src) and src[pos] == "{":
                entries[attr] = structure()
            else:
                m = _VALUE_RE.match(src, pos)
                if not m:
                    raise ValueError(f"expected value at position {pos} in {text!r}")
                entries[attr] = m.group()
                pos = m.end()
            skip()
            if pos < len(src) and src[pos] == ",":
                pos += 1
                continue
            expect("}")
            return FeatureStructure(entries)

    result = structure()
    skip()
    if pos != len(src):
        raise ValueError(f"trailing text at position {pos} in {text!r}")
    return result


def subsumes(phi: FeatureStructure, psi: FeatureStructure) -> bool:
    """``phi ⊑ psi``: everything ``phi`` says, ``psi`` says too."""
    for attr, val in phi.items():
        if attr not in psi:
            return False
        other = psi[attr]
        if isinstance(val, FeatureStructure):
            if not isinstance(other, FeatureStructure) or not subsumes(val, other):
                return False
        elif val != other:
            return False
    return True


def generalize(phi: FeatureStructure, psi: FeatureStructure) -> FeatureStructure:
    """Most specific structure subsuming both."""
    out = {}
    for attr, val in phi.items():
        if attr not in psi:
            continue
        other = psi[attr]
        if isinstance(val, FeatureStructure) and isinstance(other, FeatureStructure):
            out[attr] = generalize(val, other)
        elif val == other:
            out[attr] = val
    return FeatureStructure(out)


def unify(phi: FeatureStructure, psi: FeatureStructure) -> Optional[FeatureStructure]:
    """Most general structure subsumed by both, or None on a value clash."""
    out = dict(phi)
    for attr, other in psi.items():
        if attr not in out:
            out[attr] = other
            continue
        val = out[attr]
        if isinstance(val, FeatureStructure) and isinstance(other, FeatureStructure):
            merged = unify(val, other)
            if merged is None:
                return None
            out[attr] = merged
        elif val != other:
            return None
    return FeatureStructure(out)


def unify_all(structures: Sequence[FeatureStructure]) -> Optional[FeatureStructure]:
    out = EMPTY
    for fs in structures:
        out = unify(out, fs)
        if out is None:
            return None
    return out


class CoordMode(str, enum.Enum):
    SUBSUMPTION = "subsumption"
    GENERALIZATION = "generalization"


def coord_node(
    conjuncts: Sequence[FeatureStructure],
    context_spec: FeatureStructure,
    mode: CoordMode = CoordMode.SUBSUMPTION,
) -> Optional[FeatureStructure]:
    """Features of the mother of a coordination, or None if it is blocked.

    Subsumption: the mother is what its context requires unified with the
    conjuncts' generalization, and must subsume every conjunct.
    Generalization: the mother is exactly the generalization, so the
    context may not add anything to it.
    """
    if not conjuncts:
        raise ValueError("coordination needs at least one conjunct")
    gen = reduce(generalize, conjuncts)
    if mode is CoordMode.SUBSUMPTION:
        mother = unify(context_spec, gen)
        if mother is None or not all(subsumes(mother, x) for x in conjuncts):
            return None
        return mother
    if mode is CoordMode.GENERALIZATION:
        return gen if subsumes(context_spec, gen) else None
    raise ValueError(f"unknown mode {mode!r}")


def is_verb(fs: FeatureStructure) -> bool:
    return "subj" in fs or "comps" in fs


def _split_on_conj(words: Sequence[str], conj: Sequence[bool]) -> list[list[int]]:
    groups: list[list[int]] = [[]]
    for k, is_c in enumerate(conj):
        if is_c:
            groups.append([])
        else:
            groups[-1].append(k)
    return groups


def analyze(
    tokens: Sequence[str],
    lexicon: Mapping,
    mode: CoordMode = CoordMode.SUBSUMPTION,
) -> bool:
    """Whether the backbone yields a well-formed sentence.

    ``lexicon`` maps words to entries with ``avm`` and ``is_conj``
    attributes.  Raises UnknownWordError, or ShapeError for sentences
    outside the backbone.
    """
    entries = []
    for w in tokens:
        entry = lexicon.get(w)
        if entry is None:
            raise UnknownWordError(w)
        if not entry.is_conj and entry.avm is None:
            raise ShapeError(f"word {w!r} has no attribute-value entry")
        entries.append(entry)
    conj = [e.is_conj for e in entries]
    fss = [None if e.is_conj else e.avm for e in entries]
    verbish = [fs is not None and is_verb(fs) for fs in fss]

    if True not in verbish:
        raise ShapeError("no verb")
    first = verbish.index(True)
    subject = list(range(first))
    if not subject or any(conj[k] for k in subject):
        raise ShapeError("subject must be a nonempty conj-free phrase before the verb")

    # verb group: V (conj V)*
    verbs = [first]
    k = first + 1
    while k + 1 < len(tokens) and conj[k] and verbish[k + 1]:
        verbs.append(k + 1)
        k += 2
    rest = list(range(k, len(tokens)))
    if any(verbish[j] for j in rest):
        raise ShapeError("verb outside the verb group")
    phrases = _split_on_conj([tokens[j] for j in rest], [conj[j] for j in rest]) if rest else []
    if any(not ph for ph in phrases):
        raise ShapeError("empty conjunct in complement")
    if len(phrases) > 2:
        raise ShapeError("at most binary complement coordination")

    subj_fs = unify_all([fss[j] for j in subject])
    if subj_fs is None:
        return False
    verb_fss = [fss[j] for j in verbs]

    if phrases:
        if not all(isinstance(v.get("comps"), FeatureStructure) for v in verb_fss):
            return False
        comp_fss = [unify_all([fss[rest[j]] for j in ph]) for ph in phrases]
        if any(c is None for c in comp_fss):
            return False
        vg_comps = reduce(generalize, [v["comps"] for v in verb_fss])
        if len(comp_fss) > 1:
            comp = coord_node(comp_fss, vg_comps, mode)
            if comp is None:
                return False
        else:
            comp = comp_fss[0]
        context = FeatureStructure(comps=comp)
    else:
        if any("comps" in v for v in verb_fss):
            return False
        context = EMPTY

    if len(verb_fss) > 1:
        vg = coord_node(verb_fss, context, mode)
        if vg is None:
            return False
    else:
        vg = unify(verb_fss[0], context)
        if vg is None:
            return False

    subj_spec = vg.get("subj", EMPTY)
    if not isinstance(subj_spec, FeatureStructure):
        return False
    return unify(subj_fs, subj_spec) is not None
