"""Independent validation of proof trees.

Written against the rule schemas directly, without reusing the search.
Hypothesis dependence is recomputed top-down: the root antecedent is
lexical material, the premise of ``/R`` and ``\\R`` adds one hypothesis,
and the result item of a left rule depends on a hypothesis iff the slash
or any of its argument items did.
"""

from __future__ import annotations

from typing import Optional

from agreelab.features import entails
from agreelab.lcg.categories import Atomic, Conj, Over, Under, is_category
from agreelab.lcg.proof import ProofTree, Rule, Sequent


def check_proof(p: ProofTree, hypotheses: Optional[tuple[bool, ...]] = None) -> bool:
    """True iff every node of ``p`` is a correct instance of its rule.

    ``hypotheses`` flags which root antecedent items are open hypotheses;
    by default none are.
    """
    try:
        ante = p.conclusion.antecedent
        if hypotheses is None:
            hypotheses = (False,) * len(ante)
        return _check(p, tuple(hypotheses))
    except (AttributeError, TypeError, IndexError):
        return False


def _same(seq: Sequent, antecedent, succedent) -> bool:
    return tuple(seq.antecedent) == tuple(antecedent) and seq.succedent == succedent


def _check(p: ProofTree, hyp: tuple[bool, ...]) -> bool:
    seq = p.conclusion
    ante, goal = tuple(seq.antecedent), seq.succedent
    if not ante or len(hyp) != len(ante) or not is_category(goal):
        return False
    if not all(is_category(a) or isinstance(a, Conj) for a in ante):
        return False
    if p.rule is not Rule.COORD and p.coord_target is not None:
        return False
    prem = p.premises

    if p.rule is Rule.AXIOM:
        if prem or len(ante) != 1:
            return False
        if ante[0] == goal:
            return True
        return (
            isinstance(ante[0], Atomic)
            and isinstance(goal, Atomic)
            and entails(ante[0].term, goal.term)
        )

    if p.rule in (Rule.OVER_RIGHT, Rule.UNDER_RIGHT):
        kind = Over if p.rule is Rule.OVER_RIGHT else Under
        if len(prem) != 1 or not isinstance(goal, kind):
            return False
        if kind is Over:
            want, flags = ante + (goal.arg,), hyp + (True,)
        else:
            want, flags = (goal.arg,) + ante, (True,) + hyp
        return _same(prem[0].conclusion, want, goal.result) and _check(prem[0], flags)

    if p.rule in (Rule.OVER_LEFT, Rule.UNDER_LEFT):
        i = p.focus
        if len(prem) != 2 or not isinstance(i, int) or not 0 <= i < len(ante):
            return False
        fn = ante[i]
        arg_proof, main_proof = prem
        width = len(arg_proof.conclusion.antecedent)
        if width < 1:
            return False
        if p.rule is Rule.OVER_LEFT:
            if not isinstance(fn, Over):
                return False
            g0, g1 = i + 1, i + 1 + width
            r0, r1 = i, g1
        else:
            if not isinstance(fn, Under):
                return False
            g0, g1 = i - width, i
            r0, r1 = g0, i + 1
        if g0 < 0 or g1 > len(ante):
            return False
        if not _same(arg_proof.conclusion, ante[g0:g1], fn.arg):
            return False
        main_ante = ante[:r0] + (fn.result,) + ante[r1:]
        main_hyp = hyp[:r0] + (any(hyp[r0:r1]),) + hyp[r1:]
        return (
            _same(main_proof.conclusion, main_ante, goal)
            and _check(arg_proof, hyp[g0:g1])
            and _check(main_proof, main_hyp)
        )

    if p.rule is Rule.COORD:
        c, target = p.focus, p.coord_target
        if len(prem) != 3 or not is_category(target):
            return False
        if not isinstance(c, int) or not 0 <= c < len(ante) or not isinstance(ante[c], Conj):
            return False
        left, right, main = prem
        nl = len(left.conclusion.antecedent)
        nr = len(right.conclusion.antecedent)
        a, b = c - nl, c + 1 + nr
        if nl < 1 or nr < 1 or a < 0 or b > len(ante):
            return False
        # island condition: conjuncts are exactly their own span, free of hypotheses
        if any(hyp[a:c]) or any(hyp[c + 1:b]):
            return False
        if not _same(left.conclusion, ante[a:c], target):
            return False
        if not _same(right.conclusion, ante[c + 1:b], target):
            return False
        if not _same(main.conclusion, ante[:a] + (target,) + ante[b:], goal):
            return False
        return (
            _check(left, hyp[a:c])
            and _check(right, hyp[c + 1:b])
            and _check(main, hyp[:a] + (False,) + hyp[b:])
        )

    return False
