"""Per-cell verification of student truth tables."""

from __future__ import annotations

from ..errors import StateError
from ..formulas.ast import Formula
from ..formulas.printer import render
from ..semantics.tables import TruthTable, build_truth_table
from . import verdict as vt
from .verdict import StepVerdict, accepted, rejected


def truth_table_check(f: Formula, student: TruthTable) -> list[list[StepVerdict]]:
    """Compare every cell of ``student`` against the reference table.

    The student table must have the reference shape (same atom order
    semantics, same subformula columns, 2^n rows); shape problems raise
    StateError, wrong cell values come back as rejected verdicts with the
    (row, column) locus.
    """
    reference = build_truth_table(f, student.atoms)
    if student.columns != reference.columns:
        raise StateError(
            "column mismatch: expected subformula columns "
            + ", ".join(render(c) for c in reference.columns)
        )
    if len(student.rows) != len(reference.rows):
        raise StateError(
            f"expected {len(reference.rows)} rows, found {len(student.rows)}"
        )
    matrix: list[list[StepVerdict]] = []
    for i, (srow, rrow) in enumerate(zip(student.rows, reference.rows)):
        if len(srow) != len(rrow):
            raise StateError(f"row {i} has {len(srow)} cells, expected {len(rrow)}")
        row = []
        for j, (sval, rval) in enumerate(zip(srow, rrow)):
            if bool(sval) == rval:
                row.append(accepted())
            else:
                row.append(
                    rejected(
                        vt.WRONG_CELL,
                        f"row {i}, column {render(student.columns[j])} should be"
                        f" {'1' if rval else '0'}",
                        locus=(i, j),
                        expected=rval,
                    )
                )
        matrix.append(row)
    return matrix


def table_all_correct(matrix: list[list[StepVerdict]]) -> bool:
    return all(cell.accepted for row in matrix for cell in row)
