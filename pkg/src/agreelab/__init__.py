"""Grammaticality laboratory for feature-based agreement.

Two engines judge the same sentences:

* an implication-based one, a Lambek categorial grammar whose atomic
  categories are negation-free propositional feature terms, decided by
  sequent-calculus proof search with a coordination schema;
* a consistency-based one, flat attribute-value structures with
  subsumption, generalization and unification, using the usual
  phrase-structure coordination condition.

The :mod:`agreelab.harness` module runs both over a corpus and reports
where each agrees with the gold judgments.
"""

from agreelab.features import (
    And,
    Atom,
    FeatureTerm,
    Or,
    consistent,
    entails,
    equivalent,
    fixes,
    parse_term,
)
from agreelab.syntax import ParseError

__all__ = [
    "And",
    "Atom",
    "FeatureTerm",
    "Or",
    "ParseError",
    "consistent",
    "entails",
    "equivalent",
    "fixes",
    "parse_term",
]

__version__ = "0.1.0"
