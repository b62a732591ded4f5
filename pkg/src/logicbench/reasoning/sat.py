"""Propositional satisfiability and equivalence.

Decisions enumerate truth tables up to 20 atoms and fall back to a
splitting search with constant folding beyond that; grading inputs stay
far below either bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..errors import KindMismatchError
from ..formulas import ast
from ..formulas.ast import And, Atom, Bottom, Formula, Iff, Not, Or, Top
from ..semantics.evaluate import eval_pl
from ..semantics.tables import valuation_for_row

ENUMERATION_LIMIT = 20


@dataclass(frozen=True)
class SatResult:
    satisfiable: bool
    witness: Any | None = None

    @property
    def status(self) -> str:
        return "satisfiable" if self.satisfiable else "unsatisfiable"


@dataclass(frozen=True)
class EquivResult:
    equivalent: bool
    witness: Any | None = None

    @property
    def status(self) -> str:
        return "equivalent" if self.equivalent else "inequivalent"


def _require_propositional(f: Formula) -> None:
    if not ast.is_propositional(f):
        raise KindMismatchError("expected a propositional formula")


def pl_satisfiable(f: Formula) -> SatResult:
    """Complete decision; a satisfying valuation is returned as witness."""
    _require_propositional(f)
    names = tuple(sorted(ast.atoms(f)))
    if len(names) <= ENUMERATION_LIMIT:
        for index in range(2 ** len(names)):
            v = valuation_for_row(names, index)
            if eval_pl(f, v):
                return SatResult(True, v)
        return SatResult(False)
    partial = _split(_fold(f))
    if partial is None:
        return SatResult(False)
    witness = {name: partial.get(name, False) for name in names}
    return SatResult(True, witness)


def pl_equivalent(f: Formula, g: Formula) -> EquivResult:
    """Equivalent iff f <-> g is valid; otherwise a distinguishing valuation
    over the union of both atom sets is returned."""
    _require_propositional(f)
    _require_propositional(g)
    result = pl_satisfiable(Not(Iff(f, g)))
    if result.satisfiable:
        return EquivResult(False, result.witness)
    return EquivResult(True)


# ---- splitting fallback for very wide formulas -----------------------------


def _fold(f: Formula) -> Formula:
    """Bottom-up constant folding."""
    if isinstance(f, (Atom, Top, Bottom)):
        return f
    children = tuple(_fold(c) for c in f.children())
    if isinstance(f, Not):
        (c,) = children
        if isinstance(c, Top):
            return Bottom()
        if isinstance(c, Bottom):
            return Top()
        return Not(c)
    left, right = children
    if isinstance(f, And):
        if isinstance(left, Bottom) or isinstance(right, Bottom):
            return Bottom()
        if isinstance(left, Top):
            return right
        if isinstance(right, Top):
            return left
        return And(left, right)
    if isinstance(f, Or):
        if isinstance(left, Top) or isinstance(right, Top):
            return Top()
        if isinstance(left, Bottom):
            return right
        if isinstance(right, Bottom):
            return left
        return Or(left, right)
    if isinstance(f, ast.Implies):
        if isinstance(left, Bottom) or isinstance(right, Top):
            return Top()
        if isinstance(left, Top):
            return right
        if isinstance(right, Bottom):
            return Not(left) if not isinstance(left, (Top, Bottom)) else Bottom()
        return ast.Implies(left, right)
    if isinstance(left, Top):
        return right
    if isinstance(right, Top):
        return left
    if isinstance(left, Bottom):
        return _fold(Not(right))
    if isinstance(right, Bottom):
        return _fold(Not(left))
    return ast.Iff(left, right)


def _assign(f: Formula, name: str, value: bool) -> Formula:
    if isinstance(f, Atom):
        if f.name == name:
            return Top() if value else Bottom()
        return f
    if isinstance(f, (Top, Bottom)):
        return f
    return _fold(ast.rebuild(f, tuple(_assign(c, name, value) for c in f.children())))


def _split(f: Formula) -> dict[str, bool] | None:
    if isinstance(f, Top):
        return {}
    if isinstance(f, Bottom):
        return None
    name = next(iter(ast.atoms(f)))
    for value in (False, True):
        rest = _split(_assign(f, name, value))
        if rest is not None:
            rest[name] = value
            return rest
    return None
