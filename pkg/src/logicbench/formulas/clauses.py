"""Clauses, literals, and substitutions for resolution.

A literal is a signed atom: propositional literals have an empty argument
tuple, first-order literals carry terms.  Clauses are frozensets of
literals, clause sets frozensets of clauses, so duplicate literals collapse
by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from . import fol
from .fol import Const, Func, Term, Var


@dataclass(frozen=True, slots=True)
class Literal:
    name: str
    args: tuple[Term, ...] = ()
    positive: bool = True

    @property
    def complement(self) -> "Literal":
        return Literal(self.name, self.args, not self.positive)

    @property
    def is_propositional(self) -> bool:
        return not self.args


Clause = frozenset  # of Literal
ClauseSet = frozenset  # of Clause


@dataclass(frozen=True)
class Substitution:
    """Finite map from variable names to terms, applied simultaneously."""

    mapping: Mapping[str, Term] = field(default_factory=dict)

    def __post_init__(self):
        for name in self.mapping:
            if not fol.is_variable_name(name):
                raise ValueError(f"substitution domain must be variables, got {name!r}")

    def get(self, name: str) -> Term | None:
        return self.mapping.get(name)

    @property
    def is_identity(self) -> bool:
        return not self.mapping

    def items(self):
        return self.mapping.items()

    def __eq__(self, other):
        if not isinstance(other, Substitution):
            return NotImplemented
        return dict(self.mapping) == dict(other.mapping)


def substitute_term(t: Term, sub: Substitution) -> Term:
    if isinstance(t, Var):
        replacement = sub.get(t.name)
        return replacement if replacement is not None else t
    if isinstance(t, Func):
        return Func(t.name, tuple(substitute_term(a, sub) for a in t.args))
    return t


def substitute_literal(lit: Literal, sub: Substitution) -> Literal:
    if not lit.args:
        return lit
    return Literal(lit.name, tuple(substitute_term(a, sub) for a in lit.args), lit.positive)


def substitute_clause(clause: Clause, sub: Substitution) -> Clause:
    return frozenset(substitute_literal(lit, sub) for lit in clause)


def apply_substitution(value, sub: Substitution):
    """Apply ``sub`` to a term, literal, or clause (simultaneous replacement)."""
    if isinstance(value, Term):
        return substitute_term(value, sub)
    if isinstance(value, Literal):
        return substitute_literal(value, sub)
    if isinstance(value, frozenset):
        return substitute_clause(value, sub)
    raise TypeError(f"cannot apply substitution to {type(value).__name__}")


def compose(first: Substitution, then: Substitution) -> Substitution:
    """Substitution mapping x to then(first(x))."""
    mapping: dict[str, Term] = {
        name: substitute_term(term, then) for name, term in first.items()
    }
    for name, term in then.items():
        mapping.setdefault(name, term)
    # drop trivial bindings so composed results stay tidy
    mapping = {n: t for n, t in mapping.items() if t != Var(n)}
    return Substitution(mapping)


def clause_variables(clause: Clause) -> frozenset[str]:
    out: set[str] = set()
    for lit in clause:
        for arg in lit.args:
            out |= fol.term_variables(arg)
    return frozenset(out)


# Constructors used by tests and fixtures.

def lit(name: str, *args: Term, positive: bool = True) -> Literal:
    return Literal(name, tuple(args), positive)


def neg(name: str, *args: Term) -> Literal:
    return Literal(name, tuple(args), False)


def var(name: str) -> Var:
    return Var(name)


def const(name: str) -> Const:
    return Const(name)


def func(name: str, *args: Term) -> Func:
    return Func(name, tuple(args))
