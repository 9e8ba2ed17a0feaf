"""Judgment corpus files: tab-separated, ``#`` comment lines.

Columns: id, sentence, gold, expected_lcg, expected_avm, note.  Verdict
columns hold ``accept`` or ``reject``; ``expected_avm`` may also be ``-``
for sentences outside the attribute-value backbone.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from agreelab.errors import LexiconError

ACCEPT, REJECT = "accept", "reject"
NOT_APPLICABLE = "-"
COLUMNS = ("id", "sentence", "gold", "expected_lcg", "expected_avm", "note")


@dataclass(frozen=True)
class CorpusRow:
    id: str
    tokens: tuple[str, ...]
    gold: str
    expected_lcg: str
    expected_avm: str
    note: str = ""

    @property
    def sentence(self) -> str:
        return " ".join(self.tokens)


class CorpusError(LexiconError):
    pass


def _verdict(value: str, column: str, source, lineno: int, allow_na: bool = False) -> str:
    value = value.strip().lower()
    allowed = {ACCEPT, REJECT} | ({NOT_APPLICABLE} if allow_na else set())
    if value not in allowed:
        raise CorpusError(f"{column} must be one of {sorted(allowed)}, got {value!r}", source, lineno)
    return value


def parse_corpus(text: str, source=None) -> list[CorpusRow]:
    rows = []
    seen: dict[str, int] = {}
    lines = io.StringIO(text)
    for lineno, fields in enumerate(csv.reader(lines, delimiter="\t"), 1):
        if not fields or not "".join(fields).strip() or fields[0].lstrip().startswith("#"):
            continue
        if len(fields) < 5 or len(fields) > 6:
            raise CorpusError(f"expected 5 or 6 tab-separated columns, got {len(fields)}", source, lineno)
        rid = fields[0].strip()
        if rid in seen:
            raise CorpusError(f"duplicate id {rid!r} (first on line {seen[rid]})", source, lineno)
        seen[rid] = lineno
        tokens = tuple(fields[1].split())
        if not tokens:
            raise CorpusError("empty sentence", source, lineno)
        rows.append(CorpusRow(
            id=rid,
            tokens=tokens,
            gold=_verdict(fields[2], "gold", source, lineno),
            expected_lcg=_verdict(fields[3], "expected_lcg", source, lineno),
            expected_avm=_verdict(fields[4], "expected_avm", source, lineno, allow_na=True),
            note=fields[5].strip() if len(fields) > 5 else "",
        ))
    return rows


def load_corpus(path: Union[str, Path]) -> list[CorpusRow]:
    path = Path(path)
    # newline="" keeps csv in charge of line endings
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_corpus(fh.read(), path)


def format_corpus(rows: list[CorpusRow], header: Optional[str] = None) -> str:
    out = io.StringIO()
    if header:
        for line in header.splitlines():
            out.write(f"# {line}\n")
    w = csv.writer(out, delimiter="\t", lineterminator="\n")
    for r in rows:
        w.writerow([r.id, r.sentence, r.gold, r.expected_lcg, r.expected_avm, r.note])
    return out.getvalue()
