"""Syntactic normal-form recognition and clause conversion.

The engine never rewrites student formulas into normal forms; it only
recognizes whether a formula already has the requested shape.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ..errors import NormalFormError
from . import ast
from .ast import And, Atom, Bottom, Formula, Implies, Not, Or, Top
from .clauses import Clause, ClauseSet, Literal


class NormalFormKind(enum.Enum):
    NNF = "NNF"
    CNF = "CNF"
    DNF = "DNF"
    HORN = "HORN"
    IMPLICATION_FORM = "IMPLICATION_FORM"


@dataclass(frozen=True)
class ImplicationClause:
    """One conjunct ``p1 & ... & pk -> q``.

    Empty ``premises`` is the constant-1 premise; ``conclusion`` None is the
    constant-0 conclusion.
    """

    premises: tuple[str, ...]
    conclusion: str | None


def _is_literal(f: Formula) -> bool:
    return isinstance(f, Atom) or (isinstance(f, Not) and isinstance(f.child, Atom))


def _is_nnf(f: Formula) -> bool:
    if isinstance(f, (Atom, Top, Bottom)):
        return True
    if isinstance(f, Not):
        return isinstance(f.child, Atom)
    if isinstance(f, (And, Or, ast.Box, ast.Diamond)):
        return all(_is_nnf(c) for c in f.children())
    return False  # -> and <-> are not NNF connectives


def _disjuncts(f: Formula) -> list[Formula]:
    if isinstance(f, Or):
        return _disjuncts(f.left) + _disjuncts(f.right)
    return [f]


def _conjuncts(f: Formula) -> list[Formula]:
    if isinstance(f, And):
        return _conjuncts(f.left) + _conjuncts(f.right)
    return [f]


def _is_clause(f: Formula) -> bool:
    return all(_is_literal(d) for d in _disjuncts(f))


def _is_cnf(f: Formula) -> bool:
    return all(_is_clause(c) for c in _conjuncts(f))


def _is_dnf(f: Formula) -> bool:
    def is_term(t: Formula) -> bool:
        return all(_is_literal(c) for c in _conjuncts(t))

    return all(is_term(d) for d in _disjuncts(f))


def _is_horn(f: Formula) -> bool:
    if not _is_cnf(f):
        return False
    for clause in _conjuncts(f):
        positive = sum(1 for d in _disjuncts(clause) if isinstance(d, Atom))
        if positive > 1:
            return False
    return True


def _implication_unit(f: Formula) -> ImplicationClause | None:
    if not isinstance(f, Implies):
        return None
    premise, conclusion = f.left, f.right
    if isinstance(premise, Top):
        premises: tuple[str, ...] = ()
    else:
        parts = _conjuncts(premise)
        if not all(isinstance(p, Atom) for p in parts):
            return None
        premises = tuple(p.name for p in parts)
    if isinstance(conclusion, Atom):
        return ImplicationClause(premises, conclusion.name)
    if isinstance(conclusion, Bottom):
        return ImplicationClause(premises, None)
    return None


def _is_implication_form(f: Formula) -> bool:
    return all(_implication_unit(c) is not None for c in _conjuncts(f))


def check_normal_form(f: Formula, kind: NormalFormKind) -> bool:
    """True iff ``f`` syntactically matches ``kind``.

    CNF/DNF/HORN/IMPLICATION_FORM are defined for propositional formulas
    only; passing a modal formula raises NormalFormError.
    """
    kind = NormalFormKind(kind)
    if kind is NormalFormKind.NNF:
        return _is_nnf(f)
    if not ast.is_propositional(f):
        raise NormalFormError(
            f"{kind.value} is a propositional shape; the formula contains modalities"
        )
    if kind is NormalFormKind.CNF:
        return _is_cnf(f)
    if kind is NormalFormKind.DNF:
        return _is_dnf(f)
    if kind is NormalFormKind.HORN:
        return _is_horn(f)
    return _is_implication_form(f)


def to_clause_set(f: Formula) -> ClauseSet:
    """Clause set of a CNF formula, one clause per conjunct."""
    if not ast.is_propositional(f) or not _is_cnf(f):
        raise NormalFormError("formula is not in conjunctive normal form")
    clauses = set()
    for conjunct in _conjuncts(f):
        literals = set()
        for d in _disjuncts(conjunct):
            if isinstance(d, Atom):
                literals.add(Literal(d.name))
            else:
                literals.add(Literal(d.child.name, positive=False))
        clauses.add(frozenset(literals))
    return frozenset(clauses)


def implication_clauses(f: Formula) -> tuple[ImplicationClause, ...]:
    """The conjuncts of an implication-form formula, in order."""
    units = []
    for conjunct in _conjuncts(f):
        unit = _implication_unit(conjunct)
        if unit is None:
            raise NormalFormError("formula is not in implication form")
        units.append(unit)
    return tuple(units)


def clauses_to_formula(clause_set: ClauseSet) -> Formula:
    """Deterministic CNF formula equivalent to ``clause_set``."""
    from .printer import render_literal

    def literal_formula(l: Literal) -> Formula:
        return Atom(l.name) if l.positive else Not(Atom(l.name))

    clause_formulas = []
    for clause in sorted(clause_set, key=lambda c: sorted(render_literal(l) for l in c)):
        lits = sorted(clause, key=render_literal)
        if not lits:
            clause_formulas.append(Bottom())
            continue
        out = literal_formula(lits[0])
        for l in lits[1:]:
            out = Or(out, literal_formula(l))
        clause_formulas.append(out)
    if not clause_formulas:
        return Top()
    out = clause_formulas[0]
    for cf in clause_formulas[1:]:
        out = And(out, cf)
    return out
