"""Lexicon files.

One entry per line, ``#`` starts a comment::

    Kim := np & sg & 3                 categorial entry
    soundly := (s\\np&sg)\\(s\\np&sg) ; (s\\np&pl)\\(s\\np&pl)
    Kim :a= {noun:+, verb:-}           attribute-value entry
    and :conj                          coordinating word

Repeated ``:=`` lines for a word add readings.
"""

from __future__ import annotations

import re
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Optional, Union

from agreelab.avm import FeatureStructure, parse_fs
from agreelab.errors import LexiconError
from agreelab.lcg.categories import Category, parse_category
from agreelab.syntax import ParseError

_LINE_RE = re.compile(r"^(?P<word>\S+?)\s*(?P<op>:=|:a=|:conj)(?P<rest>.*)$")


@dataclass(frozen=True)
class LexiconEntry:
    word: str
    lcg_categories: tuple[Category, ...] = ()
    avm: Optional[FeatureStructure] = None
    is_conj: bool = False


@dataclass
class _Draft:
    categories: list = field(default_factory=list)
    avm: Optional[FeatureStructure] = None
    is_conj: bool = False
    first_line: int = 0


class Lexicon(Mapping):
    def __init__(self, entries: Mapping[str, LexiconEntry], source: Union[str, Path, None] = None):
        self._entries = dict(entries)
        self.source = source

    def __getitem__(self, word: str) -> LexiconEntry:
        return self._entries[word]

    def __iter__(self) -> Iterator[str]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)


def parse_lexicon(text: str, source=None) -> Lexicon:
    drafts: dict[str, _Draft] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _LINE_RE.match(line)
        if m is None:
            raise LexiconError(f"cannot parse line {line!r}", source, lineno)
        word, op, rest = m.group("word"), m.group("op"), m.group("rest").strip()
        draft = drafts.setdefault(word, _Draft(first_line=lineno))
        if op == ":conj":
            if rest:
                raise LexiconError(f"unexpected text after :conj: {rest!r}", source, lineno)
            draft.is_conj = True
        elif op == ":=":
            for part in rest.split(";"):
                part = part.strip()
                if not part:
                    raise LexiconError(f"empty category for {word!r}", source, lineno)
                try:
                    cat = parse_category(part)
                except ParseError as exc:
                    raise LexiconError(str(exc), source, lineno) from None
                if cat not in draft.categories:
                    draft.categories.append(cat)
        else:
            if draft.avm is not None:
                raise LexiconError(f"second attribute-value entry for {word!r}", source, lineno)
            try:
                draft.avm = parse_fs(rest)
            except ValueError as exc:
                raise LexiconError(str(exc), source, lineno) from None
        if draft.is_conj and (draft.categories or draft.avm is not None):
            raise LexiconError(f"conjunction {word!r} also given a category", source, lineno)

    entries = {}
    for word, d in drafts.items():
        if not d.is_conj and not d.categories:
            raise LexiconError(f"{word!r} has no categorial entry", source, d.first_line)
        entries[word] = LexiconEntry(word, tuple(d.categories), d.avm, d.is_conj)
    return Lexicon(entries, source)


def load_lexicon(path: Union[str, Path]) -> Lexicon:
    """Read a lexicon file; raises OSError or LexiconError."""
    path = Path(path)
    return parse_lexicon(path.read_text(encoding="utf-8"), path)
