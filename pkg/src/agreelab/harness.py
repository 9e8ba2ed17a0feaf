"""Run both engines over sentences and corpora."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Optional, Sequence, Union

from agreelab import avm
from agreelab.corpus import ACCEPT, NOT_APPLICABLE, REJECT, CorpusRow, load_corpus
from agreelab.errors import ShapeError, UnknownWordError
from agreelab.lcg import prover
from agreelab.lcg.categories import Conj, atomic
from agreelab.lcg.checker import check_proof
from agreelab.lcg.pool import build_pool
from agreelab.lcg.proof import ProofTree
from agreelab.lexicon import Lexicon, load_lexicon

ENGINES = ("lcg", "avm-sub", "avm-gen")
AVM_MODES = {"avm-sub": avm.CoordMode.SUBSUMPTION, "avm-gen": avm.CoordMode.GENERALIZATION}
SENTENCE = atomic("s")


@dataclass(frozen=True)
class Judgment:
    engine: str
    verdict: str  # accept | reject | "-" (sentence outside the engine's coverage)
    proof: Optional[ProofTree] = None
    reading: tuple = ()  # the lexical choices the proof uses
    pool_bounded: bool = False  # a reject that relied on the finite coordination pool
    steps: int = 0


def _lookup(tokens: Sequence[str], lexicon: Mapping):
    entries = []
    for w in tokens:
        entry = lexicon.get(w)
        if entry is None:
            raise UnknownWordError(w)
        entries.append(entry)
    return entries


def judge_lcg(tokens: Sequence[str], lexicon: Mapping, fuel: int = prover.DEFAULT_FUEL) -> Judgment:
    entries = _lookup(tokens, lexicon)
    choices = [[Conj(e.word)] if e.is_conj else list(e.lcg_categories) for e in entries]
    if any(not c for c in choices):
        missing = next(e.word for e, c in zip(entries, choices) if not c)
        raise UnknownWordError(missing)
    steps = 0
    bounded = False
    for reading in itertools.product(*choices):
        pool = build_pool([c for c in reading if not isinstance(c, Conj)])
        search = prover.Prover(pool, fuel)
        proof = search.derive(reading, SENTENCE)
        steps += search.steps
        bounded = bounded or search.coord_attempted
        if proof is not None:
            if not check_proof(proof):
                raise AssertionError(f"search produced an invalid proof for {' '.join(tokens)!r}")
            return Judgment("lcg", ACCEPT, proof, tuple(reading), steps=steps)
    return Judgment("lcg", REJECT, pool_bounded=bounded, steps=steps)


def judge(tokens: Sequence[str], lexicon: Mapping, engine: str = "lcg") -> Judgment:
    """Verdict of one engine.

    Raises UnknownWordError for words missing from the lexicon.  The AVM
    engines give ``"-"`` for sentences outside their backbone.
    """
    if engine == "lcg":
        return judge_lcg(tokens, lexicon)
    if engine not in AVM_MODES:
        raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES}")
    _lookup(tokens, lexicon)
    try:
        ok = avm.analyze(tokens, lexicon, AVM_MODES[engine])
    except ShapeError:
        return Judgment(engine, NOT_APPLICABLE)
    return Judgment(engine, ACCEPT if ok else REJECT)


@dataclass
class RowResult:
    row: CorpusRow
    results: dict[str, Judgment] = field(default_factory=dict)
    error: Optional[str] = None

    def actual(self, engine: str) -> Optional[str]:
        j = self.results.get(engine)
        return j.verdict if j else None

    def expected(self, engine: str) -> str:
        return self.row.expected_lcg if engine == "lcg" else self.row.expected_avm

    @property
    def mismatches(self) -> list[str]:
        if self.error:
            return list(ENGINES)
        return [e for e in ENGINES if self.actual(e) != self.expected(e)]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    @property
    def modes_agree(self) -> bool:
        return self.actual("avm-sub") == self.actual("avm-gen")


@dataclass
class JudgmentReport:
    rows: list[RowResult]
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def summary(self) -> dict[str, int]:
        out = {"rows": len(self.rows), "errors": sum(1 for r in self.rows if r.error)}
        for e in ENGINES:
            out[f"{e} matches"] = sum(1 for r in self.rows if not r.error and e not in r.mismatches)
            out[f"{e} vs gold"] = sum(
                1 for r in self.rows if not r.error and r.actual(e) == r.row.gold
            )
        out["mismatched rows"] = sum(1 for r in self.rows if not r.ok)
        out["avm mode disagreements"] = sum(1 for r in self.rows if not r.error and not r.modes_agree)
        return out


def judge_row(row: CorpusRow, lexicon: Mapping) -> RowResult:
    result = RowResult(row)
    try:
        for engine in ENGINES:
            result.results[engine] = judge(row.tokens, lexicon, engine)
    except (UnknownWordError, prover.FuelExhausted) as exc:
        result.error = str(exc)
        result.results.clear()
    return result


def run_rows(rows: Sequence[CorpusRow], lexicon: Mapping) -> JudgmentReport:
    start = time.perf_counter()
    results = [judge_row(r, lexicon) for r in rows]
    return JudgmentReport(results, time.perf_counter() - start)


def run_corpus(corpus_path: Union[str, Path], lexicon_path: Union[str, Path]) -> JudgmentReport:
    lexicon = lexicon_path if isinstance(lexicon_path, Lexicon) else load_lexicon(lexicon_path)
    return run_rows(load_corpus(corpus_path), lexicon)
