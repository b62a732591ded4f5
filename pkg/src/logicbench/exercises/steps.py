"""Proof-step answers for the step-checked task kinds."""

from __future__ import annotations

from dataclasses import dataclass

from ..formulas.clauses import Literal, Substitution


@dataclass(frozen=True)
class TableauApply:
    premise: int
    rule: str
    branch: int
    target_prefix: str | None = None


@dataclass(frozen=True)
class TableauClose:
    branch: int
    node_a: int
    node_b: int | None = None


@dataclass(frozen=True)
class HornMark:
    variable: str
    clause_index: int


@dataclass(frozen=True)
class HornConclude:
    claim: str  # "satisfiable" | "unsatisfiable"


@dataclass(frozen=True)
class ResolvePl:
    parent1: int
    parent2: int
    pivot: str
    resolvent: frozenset  # of Literal


@dataclass(frozen=True)
class ResolveFo:
    parent1: int
    sub1: Substitution
    parent2: int
    sub2: Substitution
    pivot1: Literal
    pivot2: Literal
    resolvent: frozenset  # of Literal


@dataclass(frozen=True)
class BisimRemove:
    pair: tuple[str, str]
    kind: str  # label-mismatch | forth-fail | back-fail
    successor: str | None = None


@dataclass(frozen=True)
class BisimConclude:
    relation: frozenset  # of (world, world)


ProofStep = (
    TableauApply,
    TableauClose,
    HornMark,
    HornConclude,
    ResolvePl,
    ResolveFo,
    BisimRemove,
    BisimConclude,
)
