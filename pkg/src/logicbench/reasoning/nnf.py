"""Negation-normal-form conversion, used internally by the decision
procedures.  Student-facing code never rewrites formulas."""

from __future__ import annotations

from ..formulas import ast
from ..formulas.ast import (
    And,
    Atom,
    Bottom,
    Box,
    Diamond,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Top,
)


def to_nnf(f: Formula) -> Formula:
    """Equivalent formula with only and/or/modalities over literals."""
    if isinstance(f, (Atom, Top, Bottom)):
        return f
    if isinstance(f, Not):
        return _negated(f.child)
    if isinstance(f, And):
        return And(to_nnf(f.left), to_nnf(f.right))
    if isinstance(f, Or):
        return Or(to_nnf(f.left), to_nnf(f.right))
    if isinstance(f, Implies):
        return Or(_negated(f.left), to_nnf(f.right))
    if isinstance(f, Iff):
        return Or(
            And(to_nnf(f.left), to_nnf(f.right)),
            And(_negated(f.left), _negated(f.right)),
        )
    if isinstance(f, Box):
        return Box(to_nnf(f.child))
    if isinstance(f, Diamond):
        return Diamond(to_nnf(f.child))
    raise TypeError(f"cannot normalize {type(f).__name__}")


def _negated(f: Formula) -> Formula:
    if isinstance(f, Atom):
        return Not(f)
    if isinstance(f, Top):
        return Bottom()
    if isinstance(f, Bottom):
        return Top()
    if isinstance(f, Not):
        return to_nnf(f.child)
    if isinstance(f, And):
        return Or(_negated(f.left), _negated(f.right))
    if isinstance(f, Or):
        return And(_negated(f.left), _negated(f.right))
    if isinstance(f, Implies):
        return And(to_nnf(f.left), _negated(f.right))
    if isinstance(f, Iff):
        return Or(
            And(to_nnf(f.left), _negated(f.right)),
            And(_negated(f.left), to_nnf(f.right)),
        )
    if isinstance(f, Box):
        return Diamond(_negated(f.child))
    if isinstance(f, Diamond):
        return Box(_negated(f.child))
    raise TypeError(f"cannot negate {type(f).__name__}")
