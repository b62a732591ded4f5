"""Step-checked computation of the maximal bisimulation.

The candidate relation starts at the full product of the two world sets and
only shrinks; every removal must carry a justification that verifies against
the relation at removal time.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..semantics.structures import KripkeStructure
from ..reasoning.bisim import max_bisimulation
from . import verdict as vt
from .verdict import StepVerdict, accepted, rejected

LABEL_MISMATCH = "label-mismatch"
FORTH_FAIL = "forth-fail"
BACK_FAIL = "back-fail"


@dataclass(frozen=True)
class RemovalJustification:
    kind: str  # LABEL_MISMATCH | FORTH_FAIL | BACK_FAIL
    successor: str | None = None  # required for forth/back


@dataclass(frozen=True)
class BisimulationState:
    k1: KripkeStructure
    k2: KripkeStructure
    relation: frozenset
    log: tuple[tuple[tuple[str, str], RemovalJustification], ...] = ()


def new_bisim_state(k1: KripkeStructure, k2: KripkeStructure) -> BisimulationState:
    relation = frozenset((w1, w2) for w1 in k1.worlds for w2 in k2.worlds)
    return BisimulationState(k1, k2, relation)


def _justification_holds(s: BisimulationState, pair, justification) -> str | None:
    """None when the justification verifies, otherwise the rejection message."""
    w1, w2 = pair
    if justification.kind == LABEL_MISMATCH:
        if s.k1.label(w1) == s.k2.label(w2):
            return f"{w1} and {w2} carry the same labels"
        return None
    if justification.kind == FORTH_FAIL:
        succ = justification.successor
        if succ is None:
            return "forth-fail needs a successor"
        if succ not in s.k1.successors(w1):
            return f"{succ} is not a successor of {w1}"
        if any((succ, s2) in s.relation for s2 in s.k2.successors(w2)):
            return f"{succ} still has a partner among the successors of {w2}"
        return None
    if justification.kind == BACK_FAIL:
        succ = justification.successor
        if succ is None:
            return "back-fail needs a successor"
        if succ not in s.k2.successors(w2):
            return f"{succ} is not a successor of {w2}"
        if any((s1, succ) in s.relation for s1 in s.k1.successors(w1)):
            return f"{succ} still has a partner among the successors of {w1}"
        return None
    return f"unknown justification {justification.kind!r}"


def bisim_remove(
    s: BisimulationState, pair: tuple[str, str], justification: RemovalJustification
) -> tuple[BisimulationState, StepVerdict]:
    pair = (str(pair[0]), str(pair[1]))
    if pair not in s.relation:
        return s, rejected(
            vt.PAIR_ABSENT, f"({pair[0]}, {pair[1]}) is not in the current relation",
            locus=pair,
        )
    problem = _justification_holds(s, pair, justification)
    if problem is not None:
        return s, rejected(vt.JUSTIFICATION_FAILS, problem, locus=pair)
    state = BisimulationState(
        s.k1, s.k2, s.relation - {pair}, s.log + ((pair, justification),)
    )
    return state, accepted(removed=pair)


def bisim_conclude(
    s: BisimulationState, claim
) -> tuple[BisimulationState, StepVerdict]:
    """Accept iff the current relation is the maximal bisimulation and the
    claim matches it."""
    claim = frozenset((str(a), str(b)) for a, b in claim)
    maximal = max_bisimulation(s.k1, s.k2)
    if s.relation != maximal:
        extra = sorted(s.relation - maximal)
        return s, rejected(
            vt.PAIRS_REMAINING,
            f"pair {extra[0]} can still be removed" if extra
            else "the relation does not match the maximal bisimulation",
            locus=extra[0] if extra else None,
        )
    if claim != s.relation:
        return s, rejected(
            vt.CLAIM_MISMATCH, "the claimed relation differs from the current one"
        )
    return s, accepted(relation=sorted(s.relation))
