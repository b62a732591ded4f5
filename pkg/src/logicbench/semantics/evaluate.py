"""Evaluation of formulas under valuations, Kripke structures, and graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ..errors import EvaluationError, KindMismatchError
from ..formulas import ast, fol
from ..formulas.ast import Formula
from ..formulas.fol import FOFormula
from ..formulas.printer import render
from .structures import ColoredGraph, KripkeStructure, Valuation


def eval_pl(f: Formula, valuation: Valuation) -> bool:
    if isinstance(f, ast.Atom):
        try:
            return bool(valuation[f.name])
        except KeyError:
            raise EvaluationError(f"valuation does not assign atom {f.name!r}") from None
    if isinstance(f, ast.Top):
        return True
    if isinstance(f, ast.Bottom):
        return False
    if isinstance(f, ast.Not):
        return not eval_pl(f.child, valuation)
    if isinstance(f, ast.And):
        return eval_pl(f.left, valuation) and eval_pl(f.right, valuation)
    if isinstance(f, ast.Or):
        return eval_pl(f.left, valuation) or eval_pl(f.right, valuation)
    if isinstance(f, ast.Implies):
        return (not eval_pl(f.left, valuation)) or eval_pl(f.right, valuation)
    if isinstance(f, ast.Iff):
        return eval_pl(f.left, valuation) == eval_pl(f.right, valuation)
    raise KindMismatchError(
        f"{type(f).__name__} is not a propositional connective; use eval_ml"
    )


def eval_ml(f: Formula, k: KripkeStructure, world: str) -> bool:
    world = str(world)
    if world not in k.worlds:
        raise EvaluationError(f"unknown world {world!r}")
    if isinstance(f, ast.Atom):
        return f.name in k.label(world)
    if isinstance(f, ast.Top):
        return True
    if isinstance(f, ast.Bottom):
        return False
    if isinstance(f, ast.Not):
        return not eval_ml(f.child, k, world)
    if isinstance(f, ast.And):
        return eval_ml(f.left, k, world) and eval_ml(f.right, k, world)
    if isinstance(f, ast.Or):
        return eval_ml(f.left, k, world) or eval_ml(f.right, k, world)
    if isinstance(f, ast.Implies):
        return (not eval_ml(f.left, k, world)) or eval_ml(f.right, k, world)
    if isinstance(f, ast.Iff):
        return eval_ml(f.left, k, world) == eval_ml(f.right, k, world)
    if isinstance(f, ast.Box):
        return all(eval_ml(f.child, k, u) for u in k.successors(world))
    if isinstance(f, ast.Diamond):
        return any(eval_ml(f.child, k, u) for u in k.successors(world))
    raise KindMismatchError(f"cannot evaluate {type(f).__name__} as a modal formula")


def _term_value(t: fol.Term, graph: ColoredGraph, assignment: Mapping[str, str]) -> str:
    if isinstance(t, fol.Var):
        try:
            return str(assignment[t.name])
        except KeyError:
            raise EvaluationError(f"free variable {t.name!r} is unassigned") from None
    if isinstance(t, fol.Const):
        if t.name not in graph.nodes:
            raise EvaluationError(f"constant {t.name!r} names no node of the graph")
        return t.name
    raise EvaluationError("function symbols cannot be evaluated over a graph")


def eval_fo(
    f: FOFormula, graph: ColoredGraph, assignment: Mapping[str, str] | None = None
) -> bool:
    """Standard finite-model semantics; quantifiers range over the nodes."""
    assignment = dict(assignment or {})
    return _eval_fo(f, graph, assignment)


def _eval_fo(f: FOFormula, graph: ColoredGraph, assignment: dict[str, str]) -> bool:
    if isinstance(f, fol.Pred):
        values = [_term_value(a, graph, assignment) for a in f.args]
        if f.name == fol.EQUALS:
            return values[0] == values[1]
        if f.name == fol.EDGE:
            if len(values) != 2:
                raise EvaluationError("E takes exactly two arguments")
            return (values[0], values[1]) in graph.edges
        if len(values) != 1:
            raise EvaluationError(f"predicate {f.name!r} is not part of the graph signature")
        return f.name in graph.colors_of(values[0])
    if isinstance(f, fol.Top):
        return True
    if isinstance(f, fol.Bottom):
        return False
    if isinstance(f, fol.Not):
        return not _eval_fo(f.child, graph, assignment)
    if isinstance(f, fol.And):
        return _eval_fo(f.left, graph, assignment) and _eval_fo(f.right, graph, assignment)
    if isinstance(f, fol.Or):
        return _eval_fo(f.left, graph, assignment) or _eval_fo(f.right, graph, assignment)
    if isinstance(f, fol.Implies):
        return (not _eval_fo(f.left, graph, assignment)) or _eval_fo(f.right, graph, assignment)
    if isinstance(f, fol.Iff):
        return _eval_fo(f.left, graph, assignment) == _eval_fo(f.right, graph, assignment)
    if isinstance(f, (fol.Exists, fol.Forall)):
        probe = any if isinstance(f, fol.Exists) else all
        saved = assignment.get(f.var)

        def bind(node: str) -> bool:
            assignment[f.var] = node
            return _eval_fo(f.body, graph, assignment)

        try:
            return probe(bind(node) for node in sorted(graph.nodes))
        finally:
            if saved is None:
                assignment.pop(f.var, None)
            else:
                assignment[f.var] = saved
    raise KindMismatchError(f"cannot evaluate {type(f).__name__} over a graph")


def query_nodes(f: FOFormula, graph: ColoredGraph) -> frozenset[str]:
    """Nodes selected by a unary graph query (exactly one free variable)."""
    free = fol.free_variables(f)
    if len(free) != 1:
        raise EvaluationError(
            f"a graph query needs exactly one free variable, found {sorted(free)}"
        )
    (x,) = free
    return frozenset(n for n in graph.nodes if eval_fo(f, graph, {x: n}))


@dataclass(frozen=True)
class EvalTrace:
    """Evaluation record of one subformula at one evaluation point."""

    formula: str
    point: str
    value: bool
    children: tuple["EvalTrace", ...] = ()


@dataclass(frozen=True)
class ModelCheckResult:
    satisfies: bool
    trace: EvalTrace | None = None

    @property
    def verdict(self) -> str:
        return "satisfies" if self.satisfies else "violates"


def _trace_pl(f: Formula, v: Valuation) -> EvalTrace:
    children = tuple(_trace_pl(c, v) for c in f.children())
    return EvalTrace(render(f), "", eval_pl(f, v), children)


def _trace_ml(f: Formula, k: KripkeStructure, w: str) -> EvalTrace:
    if isinstance(f, (ast.Box, ast.Diamond)):
        children = tuple(_trace_ml(f.child, k, u) for u in sorted(k.successors(w)))
    else:
        children = tuple(_trace_ml(c, k, w) for c in f.children())
    return EvalTrace(render(f), f"world {w}", eval_ml(f, k, w), children)


def _trace_fo(f: FOFormula, g: ColoredGraph, env: dict[str, str]) -> EvalTrace:
    point = ", ".join(f"{k}={v}" for k, v in sorted(env.items()))
    if isinstance(f, (fol.Exists, fol.Forall)):
        children = []
        for node in sorted(g.nodes):
            children.append(_trace_fo(f.body, g, {**env, f.var: node}))
        return EvalTrace(render(f), point, _eval_fo(f, g, dict(env)), tuple(children))
    children = tuple(_trace_fo(c, g, env) for c in f.children())
    return EvalTrace(render(f), point, _eval_fo(f, g, dict(env)), children)


def check_model(f, candidate) -> ModelCheckResult:
    """Does ``candidate`` satisfy ``f``?  The violating case carries a trace.

    Accepts a valuation for PL formulas, a Kripke structure with a
    designated world for ML, and a colored graph for FO sentences.
    """
    if isinstance(f, Formula) and isinstance(candidate, KripkeStructure):
        if candidate.designated is None:
            raise KindMismatchError("the candidate Kripke structure has no designated world")
        value = eval_ml(f, candidate, candidate.designated)
        trace = None if value else _trace_ml(f, candidate, candidate.designated)
        return ModelCheckResult(value, trace)
    if isinstance(f, Formula) and isinstance(candidate, Mapping):
        if not ast.is_propositional(f):
            raise KindMismatchError("a valuation cannot interpret a modal formula")
        value = eval_pl(f, candidate)
        trace = None if value else _trace_pl(f, candidate)
        return ModelCheckResult(value, trace)
    if isinstance(f, FOFormula) and isinstance(candidate, ColoredGraph):
        if not fol.is_sentence(f):
            raise KindMismatchError("model checking needs a sentence (no free variables)")
        value = eval_fo(f, candidate, {})
        trace = None if value else _trace_fo(f, candidate, {})
        return ModelCheckResult(value, trace)
    raise KindMismatchError(
        f"cannot check a {type(f).__name__} against a {type(candidate).__name__}"
    )
