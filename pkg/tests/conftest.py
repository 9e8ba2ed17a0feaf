"""Session-wide proof audit.

Every proof any search returns during the test run is passed through the
independent checker.  A rejected proof fails the calling test at once;
the counts are exposed through the ``proof_audit`` fixture.
"""

from __future__ import annotations

import functools

import pytest

from agreelab.lcg import check_proof
from agreelab.lcg.prover import Prover

AUDIT = {"emitted": 0, "checked": 0}


class UncheckedProof(AssertionError):
    pass


def _audited(derive):
    @functools.wraps(derive)
    def wrapper(self, antecedent, goal):
        proof = derive(self, antecedent, goal)
        if proof is not None:
            AUDIT["emitted"] += 1
            if not check_proof(proof):
                raise UncheckedProof(f"invalid proof emitted for {proof.conclusion}")
            AUDIT["checked"] += 1
        return proof

    wrapper.__wrapped_for_audit__ = True
    return wrapper


def pytest_configure(config):
    if not getattr(Prover.derive, "__wrapped_for_audit__", False):
        Prover.derive = _audited(Prover.derive)


def pytest_terminal_summary(terminalreporter):
    terminalreporter.write_line(
        f"proof audit: {AUDIT['checked']}/{AUDIT['emitted']} emitted proofs passed check_proof"
    )


@pytest.fixture
def proof_audit():
    return AUDIT
