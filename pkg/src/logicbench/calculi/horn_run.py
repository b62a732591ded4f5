"""Step-checked HornSat marking runs."""

from __future__ import annotations

from dataclasses import dataclass

from ..formulas.ast import Formula
from ..formulas.normal_forms import ImplicationClause, implication_clauses
from ..reasoning.horn import horn_mark
from . import verdict as vt
from .verdict import StepVerdict, accepted, rejected


@dataclass(frozen=True)
class HornMarkingState:
    formula: Formula
    clauses: tuple[ImplicationClause, ...]
    markings: tuple[tuple[str, int], ...] = ()
    claim: str | None = None  # "satisfiable" | "unsatisfiable" once concluded

    @property
    def marked(self) -> frozenset[str]:
        return frozenset(v for v, _ in self.markings)


def new_horn_state(f: Formula) -> HornMarkingState:
    """Raises NormalFormError when ``f`` is not in implication form."""
    return HornMarkingState(f, implication_clauses(f))


def horn_step(
    s: HornMarkingState, variable: str, clause_index: int
) -> tuple[HornMarkingState, StepVerdict]:
    """Mark ``variable``, justified by the clause at ``clause_index``."""
    if s.claim is not None:
        return s, rejected(vt.TERMINAL_CLAIM_MADE, "the run has already concluded")
    if not 0 <= clause_index < len(s.clauses):
        return s, rejected(
            vt.UNKNOWN_CLAUSE, f"no clause with index {clause_index}", locus=clause_index
        )
    clause = s.clauses[clause_index]
    if clause.conclusion != variable:
        return s, rejected(
            vt.WRONG_CONCLUSION,
            f"clause {clause_index} concludes"
            f" {clause.conclusion if clause.conclusion is not None else '0'},"
            f" not {variable}",
            locus=clause_index,
        )
    if variable in s.marked:
        return s, rejected(vt.ALREADY_MARKED, f"{variable} is already marked", locus=variable)
    missing = [p for p in clause.premises if p not in s.marked]
    if missing:
        return s, rejected(
            vt.PREMISE_UNMARKED,
            f"premise {missing[0]} of clause {clause_index} is not marked yet",
            locus=missing[0],
        )
    state = HornMarkingState(
        s.formula, s.clauses, s.markings + ((variable, clause_index),), s.claim
    )
    return state, accepted(marked=variable)


def _firing_goal_clause(s: HornMarkingState) -> int | None:
    for index, clause in enumerate(s.clauses):
        if clause.conclusion is None and all(p in s.marked for p in clause.premises):
            return index
    return None


def _markable(s: HornMarkingState) -> str | None:
    for clause in s.clauses:
        if (
            clause.conclusion is not None
            and clause.conclusion not in s.marked
            and all(p in s.marked for p in clause.premises)
        ):
            return clause.conclusion
    return None


def horn_conclude(
    s: HornMarkingState, claim: str
) -> tuple[HornMarkingState, StepVerdict]:
    """Accept "unsatisfiable" when a 0-clause fires, "satisfiable" when the
    marking is the complete fixpoint and no 0-clause fires."""
    if claim not in ("satisfiable", "unsatisfiable"):
        return s, rejected(vt.INVALID_CLAIM, f"unknown claim {claim!r}")
    if s.claim is not None:
        return s, rejected(vt.TERMINAL_CLAIM_MADE, "the run has already concluded")
    firing = _firing_goal_clause(s)
    if claim == "unsatisfiable":
        if firing is None:
            return s, rejected(
                vt.NO_FIRING_GOAL_CLAUSE,
                "no clause with conclusion 0 has all premises marked",
            )
    else:
        missing = _markable(s)
        if missing is not None:
            return s, rejected(
                vt.FIXPOINT_INCOMPLETE,
                f"{missing} can still be marked; the fixpoint is not reached",
                locus=missing,
            )
        if firing is not None:
            return s, rejected(
                vt.CLAIM_MISMATCH,
                f"clause {firing} with conclusion 0 fires: the formula is unsatisfiable",
                locus=firing,
            )
    state = HornMarkingState(s.formula, s.clauses, s.markings, claim)
    return state, accepted(claim=claim)


def horn_reference(s: HornMarkingState):
    """Fixpoint oracle for the state's formula (used for hints and tests)."""
    return horn_mark(s.formula)
