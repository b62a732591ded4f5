"""Resolution graphs for propositional and first-order clauses.

Derived nodes are verified resolvents of two parents over a complementary
pivot.  First-order steps take student-chosen substitutions; the engine
renames the parents apart first (``renamed_parents`` shows the clause forms
substitutions refer to), and factoring happens implicitly through set
semantics.  ``unify`` computes most general unifiers for hint generation.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping

from ..errors import UnificationError
from ..formulas import fol
from ..formulas.clauses import (
    Clause,
    Literal,
    Substitution,
    clause_variables,
    substitute_clause,
    substitute_literal,
    substitute_term,
)
from ..formulas.fol import Func, Term, Var
from ..formulas.printer import render_clause, render_literal
from . import verdict as vt
from .verdict import StepVerdict, accepted, rejected


@dataclass(frozen=True)
class Derivation:
    parent1: int
    parent2: int
    pivot1: Literal
    pivot2: Literal
    sub1: Substitution | None = None
    sub2: Substitution | None = None


@dataclass(frozen=True)
class ResolutionGraph:
    logic: str
    clauses: Mapping[int, Clause]
    derivations: Mapping[int, Derivation]
    roots: tuple[int, ...]
    next_id: int

    @property
    def empty_clause_ids(self) -> tuple[int, ...]:
        return tuple(sorted(i for i, c in self.clauses.items() if not c))

    @property
    def has_empty_clause(self) -> bool:
        return bool(self.empty_clause_ids)


def new_resolution_graph(clauses: Iterable[Clause], logic: str = "PL") -> ResolutionGraph:
    if logic not in ("PL", "FO"):
        raise ValueError(f"unknown resolution logic {logic!r}")
    clause_map = {i: frozenset(c) for i, c in enumerate(clauses)}
    return ResolutionGraph(
        logic,
        MappingProxyType(clause_map),
        MappingProxyType({}),
        tuple(clause_map),
        len(clause_map),
    )


def _extend(g: ResolutionGraph, clause: Clause, derivation: Derivation) -> ResolutionGraph:
    clauses = dict(g.clauses)
    derivations = dict(g.derivations)
    clauses[g.next_id] = clause
    derivations[g.next_id] = derivation
    return ResolutionGraph(
        g.logic,
        MappingProxyType(clauses),
        MappingProxyType(derivations),
        g.roots,
        g.next_id + 1,
    )


def resolve_pl(
    g: ResolutionGraph,
    parent1: int,
    parent2: int,
    pivot: str,
    claimed_resolvent: Clause,
) -> tuple[ResolutionGraph, StepVerdict]:
    """Verify a propositional resolution step on atom ``pivot``.

    ``pivot`` must occur positively in parent1 and negatively in parent2.
    """
    for pid in (parent1, parent2):
        if pid not in g.clauses:
            return g, rejected(vt.UNKNOWN_PARENT, f"no clause with id {pid}", locus=pid)
    c1, c2 = g.clauses[parent1], g.clauses[parent2]
    pos, neg = Literal(pivot), Literal(pivot, positive=False)
    if pos not in c1:
        return g, rejected(
            vt.PIVOT_ABSENT, f"{pivot} does not occur positively in clause {parent1}",
            locus=parent1,
        )
    if neg not in c2:
        return g, rejected(
            vt.PIVOT_ABSENT, f"~{pivot} does not occur in clause {parent2}", locus=parent2
        )
    correct = (c1 - {pos}) | (c2 - {neg})
    claimed = frozenset(claimed_resolvent)
    if claimed != correct:
        return g, rejected(
            vt.RESOLVENT_MISMATCH,
            f"the resolvent of {render_clause(c1)} and {render_clause(c2)} on {pivot}"
            f" is {render_clause(correct)}",
            correct_resolvent=correct,
        )
    derivation = Derivation(parent1, parent2, pos, neg)
    return _extend(g, claimed, derivation), accepted(
        node=g.next_id, empty_clause=not claimed
    )


# ---- unification ------------------------------------------------------------


def _occurs(name: str, t: Term) -> bool:
    if isinstance(t, Var):
        return t.name == name
    if isinstance(t, Func):
        return any(_occurs(name, a) for a in t.args)
    return False


def unify(l1: Literal, l2: Literal) -> Substitution:
    """Most general unifier of two literals' atoms (sign is ignored).

    Raises UnificationError with reason "predicate_mismatch", "clash", or
    "occurs_check".  Applying the result to both literals yields
    syntactically identical atoms, and the result is idempotent.
    """
    if l1.name != l2.name or len(l1.args) != len(l2.args):
        raise UnificationError(
            f"cannot unify {render_literal(l1)} with {render_literal(l2)}:"
            " different predicate or arity",
            reason="predicate_mismatch",
        )
    bindings: dict[str, Term] = {}
    queue: list[tuple[Term, Term]] = list(zip(l1.args, l2.args))

    def resolve(t: Term) -> Term:
        while isinstance(t, Var) and t.name in bindings:
            t = bindings[t.name]
        return t

    while queue:
        a, b = queue.pop()
        a, b = resolve(a), resolve(b)
        if a == b:
            continue
        if isinstance(a, Var) or isinstance(b, Var):
            if not isinstance(a, Var):
                a, b = b, a
            target = _substitute_bound(b, bindings)
            if _occurs(a.name, target):
                raise UnificationError(
                    f"occurs check: {a.name} appears in its own binding",
                    reason="occurs_check",
                )
            bindings[a.name] = target
            continue
        if isinstance(a, Func) and isinstance(b, Func) and a.name == b.name and len(a.args) == len(b.args):
            queue.extend(zip(a.args, b.args))
            continue
        raise UnificationError(
            f"clash between {render_literal(l1)} and {render_literal(l2)}",
            reason="clash",
        )

    # flatten the triangular bindings into an idempotent substitution
    flat: dict[str, Term] = {}
    for name in bindings:
        term = _substitute_bound(Var(name), bindings)
        if term != Var(name):
            flat[name] = term
    return Substitution(flat)


def _substitute_bound(t: Term, bindings: dict[str, Term]) -> Term:
    if isinstance(t, Var):
        bound = bindings.get(t.name)
        return t if bound is None else _substitute_bound(bound, bindings)
    if isinstance(t, Func):
        return Func(t.name, tuple(_substitute_bound(a, bindings) for a in t.args))
    return t


# ---- first-order resolution --------------------------------------------------


def rename_apart(c1: Clause, c2: Clause) -> tuple[Clause, Substitution]:
    """Rename c2's variables that collide with c1's; returns (c2', renaming)."""
    taken = clause_variables(c1) | clause_variables(c2)
    renaming: dict[str, Term] = {}
    for name in sorted(clause_variables(c2) & clause_variables(c1)):
        k = 1
        while f"{name}{k}" in taken:
            k += 1
        fresh = f"{name}{k}"
        taken |= {fresh}
        renaming[name] = Var(fresh)
    sub = Substitution(renaming)
    return substitute_clause(c2, sub), sub


def renamed_parents(g: ResolutionGraph, parent1: int, parent2: int) -> tuple[Clause, Clause]:
    """The clause forms a first-order step's substitutions refer to."""
    c1 = g.clauses[parent1]
    c2, _ = rename_apart(c1, g.clauses[parent2])
    return c1, c2


def resolve_fo(
    g: ResolutionGraph,
    parent1: int,
    sub1: Substitution,
    parent2: int,
    sub2: Substitution,
    pivot1: Literal,
    pivot2: Literal,
    claimed_resolvent: Clause,
) -> tuple[ResolutionGraph, StepVerdict]:
    """Verify a first-order resolution step.

    The pivots and substitutions are interpreted against the renamed-apart
    parents (see ``renamed_parents``); after applying the substitutions the
    pivots must be syntactically complementary, and the claimed resolvent
    must equal the union of the remaining instantiated literals.
    """
    for pid in (parent1, parent2):
        if pid not in g.clauses:
            return g, rejected(vt.UNKNOWN_PARENT, f"no clause with id {pid}", locus=pid)
    c1, c2 = renamed_parents(g, parent1, parent2)
    if pivot1 not in c1:
        return g, rejected(
            vt.PIVOT_ABSENT,
            f"{render_literal(pivot1)} is not a literal of clause {parent1}",
            locus=parent1,
        )
    if pivot2 not in c2:
        return g, rejected(
            vt.PIVOT_ABSENT,
            f"{render_literal(pivot2)} is not a literal of clause {parent2}"
            " (after renaming apart)",
            locus=parent2,
        )
    i1 = substitute_literal(pivot1, sub1)
    i2 = substitute_literal(pivot2, sub2)
    if i1.name != i2.name or i1.positive == i2.positive or i1.args != i2.args:
        return g, rejected(
            vt.NOT_COMPLEMENTARY,
            f"{render_literal(i1)} and {render_literal(i2)} are not complementary"
            " after the substitutions",
        )
    correct = substitute_clause(c1 - {pivot1}, sub1) | substitute_clause(c2 - {pivot2}, sub2)
    claimed = frozenset(claimed_resolvent)
    if claimed != correct:
        return g, rejected(
            vt.RESOLVENT_MISMATCH,
            f"the resolvent is {render_clause(correct)}",
            correct_resolvent=correct,
        )
    derivation = Derivation(parent1, parent2, pivot1, pivot2, sub1, sub2)
    return _extend(g, claimed, derivation), accepted(
        node=g.next_id, empty_clause=not claimed
    )
