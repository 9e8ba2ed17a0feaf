"""Plain-text proof displays.

Two styles: the sequent tree as searched, and the equivalent natural
deduction tree with the labels ``/e``, ``\\e``, ``/iN``, ``\\iN``, ``P``
and ``co``.  Trees grow upward, one inference bar per step with its label
to the right.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from agreelab.features import Atom
from agreelab.lcg.categories import Atomic, Category, Conj, Over
from agreelab.lcg.checker import check_proof
from agreelab.lcg.proof import ProofTree, Rule

STYLES = ("sequent", "nd")
_STYLE_ALIASES = {"natural-deduction": "nd", "natural_deduction": "nd"}
GAP = 3


@dataclass
class NDNode:
    text: str
    label: Optional[str] = None
    kind: Optional[str] = None  # label without discharge index
    premises: list[NDNode] = field(default_factory=list)
    word: Optional[str] = None

    def labels(self) -> list[str]:
        out = [self.kind] if self.kind else []
        for p in self.premises:
            out.extend(p.labels())
        return out


def _cat_text(cat: Category, abbrev: Mapping[Category, str]) -> str:
    """``str(cat)`` with abbreviated subcategories written by name."""
    if cat in abbrev:
        return abbrev[cat]
    if not abbrev or isinstance(cat, Atomic):
        return str(cat)

    def part(sub: Category) -> str:
        text = _cat_text(sub, abbrev)
        simple = sub in abbrev or (isinstance(sub, Atomic) and isinstance(sub.term, Atom))
        return text if simple else f"({text})"

    slash = "/" if isinstance(cat, Over) else "\\"
    return f"{part(cat.result)}{slash}{part(cat.arg)}"


def natural_deduction(
    p: ProofTree,
    words: Optional[Sequence[str]] = None,
    abbreviations: Optional[Mapping[Category, str]] = None,
) -> NDNode:
    """Translate a sequent proof into a natural-deduction tree."""
    abbrev = abbreviations or {}
    ante = p.conclusion.antecedent
    if words is not None and len(words) != len(ante):
        raise ValueError("one word per antecedent item expected")
    leaves = []
    for k, item in enumerate(ante):
        word = words[k] if words is not None else None
        if isinstance(item, Conj):
            leaves.append(NDNode(word or item.word))
        else:
            leaves.append(NDNode(_cat_text(item, abbrev), word=word))
    return _to_nd(p, leaves, itertools.count(1), abbrev)


def _to_nd(p: ProofTree, leaves: list[NDNode], counter, abbrev) -> NDNode:
    ante, goal = p.conclusion.antecedent, p.conclusion.succedent
    text = _cat_text(goal, abbrev)
    rule = p.rule

    if rule is Rule.AXIOM:
        if ante[0] == goal:
            return leaves[0]
        return NDNode(text, "P", "P", [leaves[0]])

    if rule in (Rule.OVER_RIGHT, Rule.UNDER_RIGHT):
        n = next(counter)
        hyp = NDNode(f"[{_cat_text(goal.arg, abbrev)}]{n}")
        inner_leaves = leaves + [hyp] if rule is Rule.OVER_RIGHT else [hyp] + leaves
        inner = _to_nd(p.premises[0], inner_leaves, counter, abbrev)
        kind = "/i" if rule is Rule.OVER_RIGHT else "\\i"
        return NDNode(text, f"{kind}{n}", kind, [inner])

    if rule in (Rule.OVER_LEFT, Rule.UNDER_LEFT):
        i = p.focus
        arg_proof, main = p.premises
        width = len(arg_proof.conclusion.antecedent)
        fn = leaves[i]
        if rule is Rule.OVER_LEFT:
            g0, g1, r0, r1 = i + 1, i + 1 + width, i, i + 1 + width
        else:
            g0, g1, r0, r1 = i - width, i, i - width, i + 1
        arg = _to_nd(arg_proof, leaves[g0:g1], counter, abbrev)
        result = _cat_text(ante[i].result, abbrev)
        if rule is Rule.OVER_LEFT:
            step = NDNode(result, "/e", "/e", [fn, arg])
        else:
            step = NDNode(result, "\\e", "\\e", [arg, fn])
        return _to_nd(main, leaves[:r0] + [step] + leaves[r1:], counter, abbrev)

    if rule is Rule.COORD:
        c = p.focus
        left, right, main = p.premises
        a = c - len(left.conclusion.antecedent)
        b = c + 1 + len(right.conclusion.antecedent)
        lt = _to_nd(left, leaves[a:c], counter, abbrev)
        rt = _to_nd(right, leaves[c + 1:b], counter, abbrev)
        step = NDNode(_cat_text(p.coord_target, abbrev), "co", "co", [lt, leaves[c], rt])
        return _to_nd(main, leaves[:a] + [step] + leaves[b:], counter, abbrev)

    raise ValueError(f"unknown rule {rule!r}")


def nd_labels(p: ProofTree) -> list[str]:
    """Inference labels of the natural-deduction form, discharge indices dropped."""
    return natural_deduction(p).labels()


# -- layout -----------------------------------------------------------------


def _width(lines: list[str]) -> int:
    return max((len(s) for s in lines), default=0)


def _beside(blocks: list[list[str]]) -> list[str]:
    height = max(len(b) for b in blocks)
    widths = [_width(b) for b in blocks]
    padded = [[""] * (height - len(b)) + b for b in blocks]
    rows = []
    for r in range(height):
        rows.append((" " * GAP).join(blk[r].ljust(w) for blk, w in zip(padded, widths)))
    return [row.rstrip() for row in rows]


def _center(text: str, width: int) -> str:
    return (" " * max(0, (width - len(text)) // 2) + text).rstrip()


def _layout(conclusion: str, label: Optional[str], premises: list[list[str]]) -> list[str]:
    if label is None and not premises:
        return [conclusion]
    above = _beside(premises) if premises else []
    span = max(_width(above), len(conclusion))
    shift = " " * ((span - _width(above)) // 2)
    bar = "-" * span + (f" {label}" if label else "")
    return [(shift + s).rstrip() for s in above] + [bar, _center(conclusion, span)]


def _layout_nd(node: NDNode) -> list[str]:
    if not node.premises:
        if node.word is not None:
            span = max(len(node.word), len(node.text))
            return [_center(node.word, span), _center(node.text, span)]
        return [node.text]
    return _layout(node.text, node.label, [_layout_nd(p) for p in node.premises])


def _layout_sequent(p: ProofTree) -> list[str]:
    label = str(p.rule)
    if p.rule is Rule.COORD:
        label = f"Co[{p.coord_target}]"
    return _layout(str(p.conclusion), label, [_layout_sequent(q) for q in p.premises])


def render_proof(
    p: ProofTree,
    style: str = "sequent",
    words: Optional[Sequence[str]] = None,
    abbreviations: Optional[Mapping[Category, str]] = None,
) -> str:
    """Monospaced display of a checked proof.

    Raises ValueError for a tree that fails :func:`check_proof` or an
    unknown style.
    """
    style = _STYLE_ALIASES.get(style, style)
    if style not in STYLES:
        raise ValueError(f"unknown style {style!r}; expected one of {STYLES}")
    if not check_proof(p):
        raise ValueError("refusing to render a proof that does not check")
    if style == "sequent":
        lines = _layout_sequent(p)
    else:
        lines = _layout_nd(natural_deduction(p, words, abbreviations))
    return "\n".join(lines)
