"""Sequents and sequent-calculus proof trees."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Optional

from agreelab.lcg.categories import Category, Item, format_items


class Rule(str, enum.Enum):
    AXIOM = "Ax"
    OVER_LEFT = "/L"
    OVER_RIGHT = "/R"
    UNDER_LEFT = "\\L"
    UNDER_RIGHT = "\\R"
    COORD = "Co"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Sequent:
    antecedent: tuple[Item, ...]
    succedent: Category

    def __str__(self) -> str:
        return f"{format_items(self.antecedent)} => {self.succedent}"


@dataclass(frozen=True)
class ProofTree:
    """One inference.

    ``focus`` locates the active item in the conclusion's antecedent: the
    slash category for ``/L`` and ``\\L``, the Conj for ``Co``.  Premise
    order: ``/L`` and ``\\L`` take (argument proof, main proof); ``Co``
    takes (left conjunct, right conjunct, main proof).
    """

    conclusion: Sequent
    rule: Rule
    premises: tuple[ProofTree, ...] = ()
    coord_target: Optional[Category] = None
    focus: Optional[int] = None

    def nodes(self) -> Iterator[ProofTree]:
        yield self
        for p in self.premises:
            yield from p.nodes()

    def rules(self) -> list[Rule]:
        return [n.rule for n in self.nodes()]

    def __str__(self) -> str:
        return f"{self.rule}: {self.conclusion}"
