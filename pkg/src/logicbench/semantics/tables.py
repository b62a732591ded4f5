"""Truth tables and Kripke evaluation tables.

Truth-table rows enumerate valuations in binary counting order over the
given atom order (0 before 1, first atom most significant).  Table columns
and evaluation-table rows list the distinct subformulas in post-order, so
the formula itself comes last.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import EvaluationError
from ..formulas import ast
from ..formulas.ast import Formula
from .evaluate import eval_ml, eval_pl
from .structures import KripkeStructure, Valuation


@dataclass(frozen=True)
class TruthTable:
    atoms: tuple[str, ...]
    columns: tuple[Formula, ...]
    rows: tuple[tuple[bool, ...], ...]


@dataclass(frozen=True)
class EvaluationTable:
    rows: tuple[Formula, ...]
    worlds: tuple[str, ...]
    cells: tuple[tuple[bool, ...], ...]  # cells[i][j] = rows[i] at worlds[j]


def valuation_for_row(atom_order: tuple[str, ...], index: int) -> Valuation:
    n = len(atom_order)
    return {a: bool((index >> (n - 1 - i)) & 1) for i, a in enumerate(atom_order)}


def build_truth_table(f: Formula, atom_order=None) -> TruthTable:
    """Truth table of a propositional formula over ``atom_order``.

    The order defaults to the formula's atoms sorted by name; when given it
    must be duplicate-free and cover every atom of ``f``.
    """
    if not ast.is_propositional(f):
        raise EvaluationError("truth tables are defined for propositional formulas")
    needed = ast.atoms(f)
    if atom_order is None:
        atom_order = tuple(sorted(needed))
    else:
        atom_order = tuple(atom_order)
        if len(set(atom_order)) != len(atom_order):
            raise EvaluationError("atom order contains duplicates")
        missing = needed - set(atom_order)
        if missing:
            raise EvaluationError(f"atom order is missing {sorted(missing)}")
    columns = ast.subformulas(f)
    rows = []
    for index in range(2 ** len(atom_order)):
        v = valuation_for_row(atom_order, index)
        rows.append(tuple(eval_pl(column, v) for column in columns))
    return TruthTable(atom_order, columns, tuple(rows))


def build_evaluation_table(f: Formula, k: KripkeStructure) -> EvaluationTable:
    """Per-world truth values of every subformula of a modal formula."""
    rows = ast.subformulas(f)
    worlds = tuple(sorted(k.worlds))
    cells = tuple(
        tuple(eval_ml(row, k, w) for w in worlds) for row in rows
    )
    return EvaluationTable(rows, worlds, cells)
