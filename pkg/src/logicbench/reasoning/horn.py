"""HornSat: least-fixpoint marking over implication-form formulas."""

from __future__ import annotations

from dataclasses import dataclass

from ..formulas import ast
from ..formulas.ast import Formula
from ..formulas.normal_forms import implication_clauses


@dataclass(frozen=True)
class HornResult:
    marked: frozenset[str]
    satisfiable: bool
    order: tuple[tuple[str, int], ...]  # (variable, justifying clause index)
    witness: dict | None = None

    @property
    def status(self) -> str:
        return "satisfiable" if self.satisfiable else "unsatisfiable"


def horn_mark(f: Formula) -> HornResult:
    """Mark every variable forced true; unsatisfiable iff a 0-clause fires.

    Raises NormalFormError when ``f`` is not in implication form.
    """
    clauses = implication_clauses(f)
    marked: set[str] = set()
    order: list[tuple[str, int]] = []
    changed = True
    while changed:
        changed = False
        for index, clause in enumerate(clauses):
            if clause.conclusion is None or clause.conclusion in marked:
                continue
            if all(p in marked for p in clause.premises):
                marked.add(clause.conclusion)
                order.append((clause.conclusion, index))
                changed = True
    fired = any(
        clause.conclusion is None and all(p in marked for p in clause.premises)
        for clause in clauses
    )
    if fired:
        return HornResult(frozenset(marked), False, tuple(order))
    witness = {name: name in marked for name in ast.atoms(f)}
    return HornResult(frozenset(marked), True, tuple(order), witness)
