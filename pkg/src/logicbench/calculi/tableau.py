"""Prefixed tableau for propositional logic and modal logic K.

The tableau works on NNF inputs only; rules are alpha (conjunction), beta
(disjunction), diamond (creates a fresh accessible prefix), and box
(instantiates at an existing accessible prefix chosen by the student).
Branches close on a complementary literal pair with equal prefixes or on a
falsum node.  Saturation accounting: alpha/beta/diamond fire once per
premise node per branch, box once per (premise node, accessible prefix)
per branch.

Tableaux are immutable values; operations return a new tableau plus a
StepVerdict, and rejected steps return the input tableau unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Sequence

from ..errors import StateError, WrongLogicError
from ..formulas import ast
from ..formulas.ast import And, Atom, Bottom, Box, Diamond, Formula, Not, Or
from ..formulas.normal_forms import NormalFormKind, check_normal_form
from ..formulas.printer import render
from ..semantics.structures import KripkeStructure
from . import verdict as vt
from .verdict import StepVerdict, accepted, rejected

ROOT_PREFIX = "1"

ALPHA = "alpha"
BETA = "beta"
BOX = "box"
DIAMOND = "diamond"
ROOT = "root"

_RULE_NODE = {ALPHA: And, BETA: Or, BOX: Box, DIAMOND: Diamond}


@dataclass(frozen=True)
class TableauNode:
    id: int
    prefix: str
    formula: Formula
    rule: str
    premise: int | None = None
    parent: int | None = None


@dataclass(frozen=True)
class Tableau:
    logic: str
    nodes: Mapping[int, TableauNode]
    children: Mapping[int, tuple[int, ...]]
    closed: Mapping[int, tuple[int, int | None]]
    next_id: int

    def node(self, node_id: int) -> TableauNode | None:
        return self.nodes.get(node_id)

    def root(self) -> TableauNode:
        return self.nodes[0]


def _freeze(nodes: dict, children: dict, closed: dict, logic: str, next_id: int) -> Tableau:
    return Tableau(
        logic,
        MappingProxyType(nodes),
        MappingProxyType(children),
        MappingProxyType(closed),
        next_id,
    )


def new_tableau(formulas: Sequence[Formula], logic: str = "ML") -> Tableau:
    """Fresh tableau whose root chain carries the initial formulas."""
    if logic not in ("PL", "ML"):
        raise ValueError(f"unknown tableau logic {logic!r}")
    formulas = list(formulas)
    if not formulas:
        raise ValueError("a tableau needs at least one initial formula")
    for f in formulas:
        if not check_normal_form(f, NormalFormKind.NNF):
            raise StateError(f"tableau inputs must be in NNF: {render(f)}")
        if logic == "PL" and not ast.is_propositional(f):
            raise WrongLogicError(f"modal formula in a PL tableau: {render(f)}")
    nodes: dict[int, TableauNode] = {}
    children: dict[int, tuple[int, ...]] = {}
    parent = None
    for i, f in enumerate(formulas):
        nodes[i] = TableauNode(i, ROOT_PREFIX, f, ROOT, None, parent)
        children[i] = ()
        if parent is not None:
            children[parent] = (i,)
        parent = i
    return _freeze(nodes, children, {}, logic, len(formulas))


# ---- branch geometry -------------------------------------------------------


def branch_leaves(t: Tableau) -> tuple[int, ...]:
    return tuple(sorted(i for i, c in t.children.items() if not c))


def open_branches(t: Tableau) -> tuple[int, ...]:
    return tuple(leaf for leaf in branch_leaves(t) if leaf not in t.closed)


def branch_nodes(t: Tableau, leaf: int) -> tuple[TableauNode, ...]:
    """Nodes from the root down to ``leaf``."""
    chain = []
    cursor: int | None = leaf
    while cursor is not None:
        node = t.nodes[cursor]
        chain.append(node)
        cursor = node.parent
    return tuple(reversed(chain))


def accessible_prefixes(chain: Sequence[TableauNode], source: str, t: Tableau) -> tuple[str, ...]:
    """Prefixes reachable from ``source`` via diamond expansions on this branch."""
    out = []
    for node in chain:
        if node.rule == DIAMOND and t.nodes[node.premise].prefix == source:
            out.append(node.prefix)
    return tuple(out)


def _applied(chain: Sequence[TableauNode], rule: str, premise: int, prefix: str | None = None) -> bool:
    for node in chain:
        if node.rule == rule and node.premise == premise:
            if prefix is None or node.prefix == prefix:
                return True
    return False


def _fresh_prefix(t: Tableau, source: str) -> str:
    used = {n.prefix for n in t.nodes.values()}
    k = 1
    while f"{source}.{k}" in used:
        k += 1
    return f"{source}.{k}"


# ---- rule application ------------------------------------------------------


def tableau_apply(
    t: Tableau,
    premise: int,
    rule: str,
    branch: int,
    target_prefix: str | None = None,
) -> tuple[Tableau, StepVerdict]:
    if rule not in _RULE_NODE:
        return t, rejected(vt.RULE_MISMATCH, f"unknown rule {rule!r}")
    if premise not in t.nodes:
        return t, rejected(vt.UNKNOWN_NODE, f"no node with id {premise}", locus=premise)
    if branch not in t.nodes or t.children[branch]:
        return t, rejected(vt.UNKNOWN_BRANCH, f"{branch} is not a branch leaf", locus=branch)
    if branch in t.closed:
        return t, rejected(vt.BRANCH_CLOSED, "the branch is already closed", locus=branch)
    chain = branch_nodes(t, branch)
    chain_ids = {n.id for n in chain}
    if premise not in chain_ids:
        return t, rejected(
            vt.NOT_ON_BRANCH, f"node {premise} does not lie on this branch", locus=premise
        )
    node = t.nodes[premise]
    if not isinstance(node.formula, _RULE_NODE[rule]):
        return t, rejected(
            vt.RULE_MISMATCH,
            f"rule {rule} does not apply to {render(node.formula)}",
            locus=premise,
        )
    if rule == BOX:
        available = accessible_prefixes(chain, node.prefix, t)
        if not available:
            return t, rejected(
                vt.NO_ACCESSIBLE_PREFIX,
                f"no prefix is accessible from {node.prefix} on this branch",
                locus=premise,
            )
        if target_prefix is None:
            return t, rejected(
                vt.BOX_TARGET_REQUIRED,
                "the box rule needs a target prefix",
                locus=premise,
                accessible=list(available),
            )
        if target_prefix not in available:
            return t, rejected(
                vt.PREFIX_NOT_ACCESSIBLE,
                f"prefix {target_prefix} is not accessible from {node.prefix} on this branch",
                locus=premise,
                accessible=list(available),
            )
        if _applied(chain, BOX, premise, target_prefix):
            return t, rejected(
                vt.DUPLICATE_APPLICATION,
                f"box was already applied to node {premise} at {target_prefix}",
                locus=premise,
            )
    elif _applied(chain, rule, premise):
        return t, rejected(
            vt.DUPLICATE_APPLICATION,
            f"{rule} was already applied to node {premise} on this branch",
            locus=premise,
        )

    nodes = dict(t.nodes)
    children = dict(t.children)
    next_id = t.next_id
    created: list[int] = []

    def attach(parent: int, prefix: str, formula: Formula) -> int:
        nonlocal next_id
        nid = next_id
        next_id += 1
        nodes[nid] = TableauNode(nid, prefix, formula, rule, premise, parent)
        children[nid] = ()
        children[parent] = children[parent] + (nid,)
        created.append(nid)
        return nid

    if rule == ALPHA:
        first = attach(branch, node.prefix, node.formula.left)
        attach(first, node.prefix, node.formula.right)
    elif rule == BETA:
        attach(branch, node.prefix, node.formula.left)
        attach(branch, node.prefix, node.formula.right)
    elif rule == DIAMOND:
        attach(branch, _fresh_prefix(t, node.prefix), node.formula.child)
    else:  # box
        attach(branch, target_prefix, node.formula.child)

    return (
        _freeze(nodes, children, dict(t.closed), t.logic, next_id),
        accepted(created=created),
    )


def _complementary(a: Formula, b: Formula) -> bool:
    return (isinstance(a, Not) and a.child == b) or (isinstance(b, Not) and b.child == a)


def tableau_close(
    t: Tableau, branch: int, node_a: int, node_b: int | None = None
) -> tuple[Tableau, StepVerdict]:
    if branch not in t.nodes or t.children[branch]:
        return t, rejected(vt.UNKNOWN_BRANCH, f"{branch} is not a branch leaf", locus=branch)
    if branch in t.closed:
        return t, rejected(vt.BRANCH_CLOSED, "the branch is already closed", locus=branch)
    chain_ids = {n.id for n in branch_nodes(t, branch)}
    for nid in (node_a,) if node_b is None else (node_a, node_b):
        if nid not in t.nodes:
            return t, rejected(vt.UNKNOWN_NODE, f"no node with id {nid}", locus=nid)
        if nid not in chain_ids:
            return t, rejected(
                vt.NOT_ON_BRANCH, f"node {nid} does not lie on this branch", locus=nid
            )
    a = t.nodes[node_a]
    if node_b is None:
        if not isinstance(a.formula, Bottom):
            return t, rejected(
                vt.NOT_COMPLEMENTARY,
                "closing on a single node needs a falsum",
                locus=node_a,
            )
    else:
        b = t.nodes[node_b]
        if not _complementary(a.formula, b.formula):
            return t, rejected(
                vt.NOT_COMPLEMENTARY,
                f"{render(a.formula)} and {render(b.formula)} are not complementary",
                locus=(node_a, node_b),
            )
        if a.prefix != b.prefix:
            return t, rejected(
                vt.PREFIX_MISMATCH,
                f"complementary pair at different prefixes {a.prefix} and {b.prefix}",
                locus=(node_a, node_b),
            )
    closed = dict(t.closed)
    closed[branch] = (node_a, node_b)
    return _freeze(dict(t.nodes), dict(t.children), closed, t.logic, t.next_id), accepted()


# ---- status and model extraction -------------------------------------------


def branch_clash(t: Tableau, chain: Sequence[TableauNode]) -> tuple[int, int | None] | None:
    """A closable pair on the branch (node ids), or None."""
    by_prefix: dict[tuple[str, str], int] = {}
    for node in chain:
        if isinstance(node.formula, Bottom):
            return node.id, None
    for node in chain:
        f = node.formula
        if isinstance(f, Atom):
            key = (node.prefix, f.name)
            other = by_prefix.get(("~",) + key)
            if other is not None:
                return node.id, other
            by_prefix[("+",) + key] = node.id
        elif isinstance(f, Not) and isinstance(f.child, Atom):
            key = (node.prefix, f.child.name)
            other = by_prefix.get(("+",) + key)
            if other is not None:
                return other, node.id
            by_prefix[("~",) + key] = node.id
    return None


def branch_moves(t: Tableau, chain: Sequence[TableauNode]):
    """Legal rule applications still open on this branch, in node order."""
    for node in chain:
        f = node.formula
        if isinstance(f, And):
            if not _applied(chain, ALPHA, node.id):
                yield node.id, ALPHA, None
        elif isinstance(f, Or):
            if not _applied(chain, BETA, node.id):
                yield node.id, BETA, None
        elif isinstance(f, Box):
            for prefix in accessible_prefixes(chain, node.prefix, t):
                if not _applied(chain, BOX, node.id, prefix):
                    yield node.id, BOX, prefix
        elif isinstance(f, Diamond):
            if not _applied(chain, DIAMOND, node.id):
                yield node.id, DIAMOND, None


@dataclass(frozen=True)
class TableauStatus:
    kind: str  # "incomplete" | "all_closed" | "open_saturated"
    branch: int | None = None


def tableau_status(t: Tableau) -> TableauStatus:
    """all_closed when every branch is closed; open_saturated when some open
    branch admits neither a rule application nor a closure."""
    any_open = False
    for leaf in branch_leaves(t):
        if leaf in t.closed:
            continue
        any_open = True
        chain = branch_nodes(t, leaf)
        if branch_clash(t, chain) is not None:
            continue
        if next(branch_moves(t, chain), None) is None:
            return TableauStatus("open_saturated", leaf)
    if not any_open:
        return TableauStatus("all_closed")
    return TableauStatus("incomplete")


def tableau_extract_model(t: Tableau, branch: int):
    """Valuation (PL) or pointed Kripke structure (ML) read off an open
    saturated branch."""
    if branch not in t.nodes or t.children[branch]:
        raise StateError(f"{branch} is not a branch leaf")
    if branch in t.closed:
        raise StateError("the branch is closed")
    chain = branch_nodes(t, branch)
    if branch_clash(t, chain) is not None or next(branch_moves(t, chain), None) is not None:
        raise StateError("the branch is not saturated")
    if t.logic == "PL":
        valuation = {name: False for node in chain if node.rule == ROOT
                     for name in ast.atoms(node.formula)}
        for node in chain:
            f = node.formula
            if isinstance(f, Atom):
                valuation[f.name] = True
            elif isinstance(f, Not):
                valuation.setdefault(f.child.name, False)
        return valuation
    worlds = {node.prefix for node in chain}
    edges = set()
    labels: dict[str, set[str]] = {w: set() for w in worlds}
    for node in chain:
        if node.rule == DIAMOND:
            edges.add((t.nodes[node.premise].prefix, node.prefix))
        if isinstance(node.formula, Atom):
            labels[node.prefix].add(node.formula.name)
    return KripkeStructure(
        worlds=frozenset(worlds),
        edges=frozenset(edges),
        labels={w: frozenset(v) for w, v in labels.items()},
        designated=ROOT_PREFIX,
    )
