"""Satisfiability and equivalence for modal logic K.

The decision procedure saturates formula sets propositionally, then builds
one successor per diamond obligation (carrying all box bodies along).
Recursion terminates because modal depth strictly decreases; a witness
Kripke structure is assembled from the successful branches.
"""

from __future__ import annotations

from itertools import count

from ..formulas import ast
from ..formulas.ast import Atom, Formula, Iff, Not
from ..semantics.structures import KripkeStructure
from .nnf import to_nnf
from .sat import EquivResult, SatResult


class _ModelBuilder:
    def __init__(self):
        self.ids = count()
        self.labels: dict[int, frozenset[str]] = {}
        self.edges: list[tuple[int, int]] = []
        self.cache: dict[frozenset, int | None] = {}

    def solve(self, formulas: frozenset) -> int | None:
        if formulas in self.cache:
            return self.cache[formulas]
        result = self._solve_uncached(formulas)
        self.cache[formulas] = result
        return result

    def _solve_uncached(self, formulas: frozenset) -> int | None:
        for positive, boxes, diamonds in _saturated_branches(formulas):
            world = next(self.ids)
            self.labels[world] = frozenset(positive)
            added = 0
            ok = True
            for body in diamonds:
                child = self.solve(frozenset([body, *boxes]))
                if child is None:
                    ok = False
                    break
                self.edges.append((world, child))
                added += 1
            if ok:
                return world
            del self.edges[len(self.edges) - added :]
        return None

    def structure(self, root: int) -> KripkeStructure:
        # keep only the worlds reachable from the root
        reachable = {root}
        frontier = [root]
        while frontier:
            w = frontier.pop()
            for a, b in self.edges:
                if a == w and b not in reachable:
                    reachable.add(b)
                    frontier.append(b)
        name = {w: f"w{w}" for w in sorted(reachable)}
        return KripkeStructure(
            worlds=frozenset(name.values()),
            edges=frozenset(
                (name[a], name[b]) for a, b in self.edges if a in reachable and b in reachable
            ),
            labels={name[w]: self.labels[w] for w in reachable},
            designated=name[root],
        )


def _saturated_branches(formulas: frozenset):
    """Yield clash-free saturations as (positive atoms, box bodies, diamond bodies)."""

    def expand(pending, seen, pos, neg, boxes, dias):
        while pending:
            f = pending.pop()
            if f in seen:
                continue
            seen = seen | {f}
            if isinstance(f, ast.Top):
                continue
            if isinstance(f, ast.Bottom):
                return
            if isinstance(f, Atom):
                if f.name in neg:
                    return
                pos = pos | {f.name}
                continue
            if isinstance(f, Not):  # NNF: negation sits on an atom
                if f.child.name in pos:
                    return
                neg = neg | {f.child.name}
                continue
            if isinstance(f, ast.And):
                pending.append(f.left)
                pending.append(f.right)
                continue
            if isinstance(f, ast.Or):
                yield from expand(pending + [f.left], seen, pos, neg, boxes, dias)
                yield from expand(pending + [f.right], seen, pos, neg, boxes, dias)
                return
            if isinstance(f, ast.Box):
                boxes = boxes + (f.child,)
                continue
            if isinstance(f, ast.Diamond):
                dias = dias + (f.child,)
                continue
            raise TypeError(f"unexpected node in NNF: {type(f).__name__}")
        yield pos, boxes, dias

    yield from expand(list(formulas), frozenset(), frozenset(), frozenset(), (), ())


def ml_satisfiable(f: Formula) -> SatResult:
    """Complete decision for K; the witness is a pointed Kripke structure."""
    builder = _ModelBuilder()
    root = builder.solve(frozenset([to_nnf(f)]))
    if root is None:
        return SatResult(False)
    return SatResult(True, builder.structure(root))


def ml_equivalent(f: Formula, g: Formula) -> EquivResult:
    """Equivalent iff the biimplication holds at every world of every model."""
    result = ml_satisfiable(Not(Iff(f, g)))
    if result.satisfiable:
        return EquivResult(False, result.witness)
    return EquivResult(True)
