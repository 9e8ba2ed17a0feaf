"""Exhaustive proof search for the Lambek calculus with feature terms.

Rules, for antecedent sequences Γ, Δ (Γ never empty)::

    Ax   t => t'                  Atomic t, t' with t entailing t'
    Ax   A => A                   any category (admissible; avoids eta-expansion)
    /R   Γ, Y => X                gives  Γ => X/Y
    \\R   Y, Γ => X                gives  Γ => X\\Y
    /L   Γ => Y;  Δ1, X, Δ2 => Z  gives  Δ1, X/Y, Γ, Δ2 => Z
    \\L   Γ => Y;  Δ1, X, Δ2 => Z  gives  Δ1, Γ, X\\Y, Δ2 => Z
    Co   Δ1 => A;  Δ2 => A;  Γ1, A, Γ2 => Z
                                  gives  Γ1, Δ1, conj, Δ2, Γ2 => Z

Weakening of feature terms happens only at axioms.  The coordination
target ``A`` is drawn from a :class:`CandidatePool`.  Conjuncts must be
closed: an antecedent item carries a flag saying whether it depends on a
hypothesis introduced by ``/R`` or ``\\R``, and ``Co`` refuses conjuncts
containing a flagged item.

Every premise has fewer Conj items, or as many and fewer connectives, so
the search terminates.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional, Sequence

from agreelab import features
from agreelab.lcg.categories import Atomic, Category, Conj, Item, Over, Under, is_category
from agreelab.lcg.pool import EMPTY_POOL, CandidatePool
from agreelab.lcg.proof import ProofTree, Rule, Sequent

DEFAULT_FUEL = 5_000_000

Flags = tuple[bool, ...]


class FuelExhausted(RuntimeError):
    pass


@lru_cache(maxsize=None)
def _polarity(cat: Category) -> int:
    """Atomic occurrences of ``cat`` as an antecedent item, signed by polarity."""
    if isinstance(cat, Atomic):
        return 1
    return _polarity(cat.result) - _polarity(cat.arg)


def _balanced(items: tuple[Item, ...], goal: Category) -> bool:
    # Every axiom pairs one positive with one negative occurrence, so a
    # derivable Conj-free sequent has equal counts of each.
    return sum(_polarity(it) for it in items) == _polarity(goal)


class Prover:
    """One search over one pool; memoizes subgoals across calls."""

    def __init__(self, pool: CandidatePool = EMPTY_POOL, fuel: int = DEFAULT_FUEL):
        self.pool = pool
        self.fuel = fuel
        self.steps = 0
        self.coord_attempted = False
        self._memo: dict[tuple, Optional[ProofTree]] = {}

    def derive(self, antecedent: Sequence[Item], goal: Category) -> Optional[ProofTree]:
        items = tuple(antecedent)
        if not items:
            raise ValueError("antecedent must be nonempty")
        for it in items:
            if not (is_category(it) or isinstance(it, Conj)):
                raise TypeError(f"not a category or Conj: {it!r}")
        return self._prove(items, (False,) * len(items), goal)

    def _prove(self, items: tuple[Item, ...], hyp: Flags, goal: Category) -> Optional[ProofTree]:
        key = (items, hyp, goal)
        if key in self._memo:
            return self._memo[key]
        if not any(isinstance(it, Conj) for it in items) and not _balanced(items, goal):
            self._memo[key] = None
            return None
        self.steps += 1
        if self.steps > self.fuel:
            raise FuelExhausted(f"search exceeded {self.fuel} steps")
        self._memo[key] = None
        proof = self._search(items, hyp, goal)
        self._memo[key] = proof
        return proof

    def _search(self, items, hyp, goal):
        conclusion = Sequent(items, goal)

        if len(items) == 1 and items[0] == goal:
            return ProofTree(conclusion, Rule.AXIOM)
        if isinstance(goal, Atomic):
            if len(items) == 1 and isinstance(items[0], Atomic):
                if features.entails(items[0].term, goal.term):
                    return ProofTree(conclusion, Rule.AXIOM)
                return None
        elif len(items) == 1 and not isinstance(items[0], Conj):
            # a lone item either matches the goal or must go through a right rule
            return self._right(items, hyp, goal)

        n = len(items)
        for i, it in enumerate(items):
            if isinstance(it, Over):
                for j in range(i + 2, n + 1):
                    p = self._left(items, hyp, goal, i, i + 1, j, i, j, Rule.OVER_LEFT)
                    if p:
                        return p
            elif isinstance(it, Under):
                for k in range(i - 1, -1, -1):
                    p = self._left(items, hyp, goal, i, k, i, k, i + 1, Rule.UNDER_LEFT)
                    if p:
                        return p

        for c, it in enumerate(items):
            if isinstance(it, Conj):
                p = self._coord(items, hyp, goal, c)
                if p:
                    return p
        # Right rules last: they are invertible, so this keeps the search
        # complete, while proofs that can use a compound identity axiom
        # are found first and stay free of eta-expansions.
        if not isinstance(goal, Atomic):
            return self._right(items, hyp, goal)
        return None

    def _right(self, items, hyp, goal):
        conclusion = Sequent(items, goal)
        if isinstance(goal, Over):
            p = self._prove(items + (goal.arg,), hyp + (True,), goal.result)
            return p and ProofTree(conclusion, Rule.OVER_RIGHT, (p,))
        p = self._prove((goal.arg,) + items, (True,) + hyp, goal.result)
        return p and ProofTree(conclusion, Rule.UNDER_RIGHT, (p,))

    def _left(self, items, hyp, goal, i, g0, g1, r0, r1, rule):
        """Try a left rule on the slash at ``i`` with argument span ``[g0, g1)``.

        ``[r0, r1)`` is the span (slash plus argument) replaced by the result.
        """
        fn = items[i]
        arg = self._prove(items[g0:g1], hyp[g0:g1], fn.arg)
        if arg is None:
            return None
        flag = any(hyp[r0:r1])
        rest = self._prove(
            items[:r0] + (fn.result,) + items[r1:], hyp[:r0] + (flag,) + hyp[r1:], goal
        )
        if rest is None:
            return None
        return ProofTree(Sequent(items, goal), rule, (arg, rest), focus=i)

    def _coord(self, items, hyp, goal, c):
        self.coord_attempted = True
        n = len(items)
        targets = self.pool.targets
        for a in range(c - 1, -1, -1):
            if hyp[a]:
                break
            left_span = items[a:c]
            left_ok = [
                (t, p) for t in targets
                if (p := self._prove(left_span, hyp[a:c], t)) is not None
            ]
            if not left_ok:
                continue
            for b in range(c + 2, n + 1):
                if hyp[b - 1]:
                    break
                right_span = items[c + 1:b]
                for target, left in left_ok:
                    right = self._prove(right_span, hyp[c + 1:b], target)
                    if right is None:
                        continue
                    rest = self._prove(
                        items[:a] + (target,) + items[b:], hyp[:a] + (False,) + hyp[b:], goal
                    )
                    if rest is not None:
                        return ProofTree(
                            Sequent(items, goal), Rule.COORD, (left, right, rest),
                            coord_target=target, focus=c,
                        )
        return None


def derive(
    antecedent: Sequence[Item],
    goal: Category,
    pool: CandidatePool = EMPTY_POOL,
    fuel: int = DEFAULT_FUEL,
) -> Optional[ProofTree]:
    """A proof of ``antecedent => goal``, or None once the search is exhausted."""
    return Prover(pool, fuel).derive(antecedent, goal)
