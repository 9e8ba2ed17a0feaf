"""Lambek categorial grammar over feature terms: search, checking, display."""

from agreelab.lcg.categories import (
    Atomic,
    Category,
    Conj,
    Over,
    Under,
    atomic,
    parse_category,
)
from agreelab.lcg.checker import check_proof
from agreelab.lcg.pool import CandidatePool, build_pool
from agreelab.lcg.proof import ProofTree, Rule, Sequent
from agreelab.lcg.prover import FuelExhausted, Prover, derive
from agreelab.lcg.render import nd_labels, natural_deduction, render_proof

__all__ = [
    "Atomic",
    "CandidatePool",
    "Category",
    "Conj",
    "FuelExhausted",
    "Over",
    "ProofTree",
    "Prover",
    "Rule",
    "Sequent",
    "Under",
    "atomic",
    "build_pool",
    "check_proof",
    "derive",
    "nd_labels",
    "natural_deduction",
    "parse_category",
    "render_proof",
]
