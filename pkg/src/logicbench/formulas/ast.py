"""AST nodes for propositional and modal formulas.

Nodes are frozen dataclasses and compare structurally, so formulas can be
used as dict keys and set members.  A formula with no modal operator counts
as propositional (logic tag "PL"); any occurrence of a box or diamond makes
it "ML".
"""

from __future__ import annotations

import re
from dataclasses import dataclass

_ATOM_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class Formula:
    """Base class for all propositional/modal formula nodes."""

    __slots__ = ()

    def children(self) -> tuple["Formula", ...]:
        return ()


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not _ATOM_NAME.match(self.name):
            raise ValueError(f"invalid atom name: {self.name!r}")


@dataclass(frozen=True, slots=True)
class Top(Formula):
    pass


@dataclass(frozen=True, slots=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True, slots=True)
class Not(Formula):
    child: Formula

    def children(self):
        return (self.child,)


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True, slots=True)
class Implies(Formula):
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True, slots=True)
class Iff(Formula):
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True, slots=True)
class Box(Formula):
    child: Formula

    def children(self):
        return (self.child,)


@dataclass(frozen=True, slots=True)
class Diamond(Formula):
    child: Formula

    def children(self):
        return (self.child,)


BINARY_NODES = (And, Or, Implies, Iff)
MODAL_NODES = (Box, Diamond)


def rebuild(f: Formula, children: tuple[Formula, ...]) -> Formula:
    """Copy of ``f`` with the given children (same node kind)."""
    if isinstance(f, (Atom, Top, Bottom)):
        if children:
            raise ValueError("leaf node takes no children")
        return f
    if isinstance(f, (Not, Box, Diamond)):
        (child,) = children
        return type(f)(child)
    left, right = children
    return type(f)(left, right)


def atoms(f: Formula) -> frozenset[str]:
    """Names of all atoms occurring in ``f``."""
    out: set[str] = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            out.add(node.name)
        else:
            stack.extend(node.children())
    return frozenset(out)


def subformulas(f: Formula) -> tuple[Formula, ...]:
    """Distinct subformulas of ``f`` in post-order (``f`` itself last)."""
    seen: dict[Formula, None] = {}

    def visit(node: Formula) -> None:
        if node in seen:
            return
        for child in node.children():
            visit(child)
        seen[node] = None

    visit(f)
    return tuple(seen)


def modal_depth(f: Formula) -> int:
    depth = 0
    if isinstance(f, MODAL_NODES):
        depth = 1
    return depth + max((modal_depth(c) for c in f.children()), default=0)


def is_propositional(f: Formula) -> bool:
    if isinstance(f, MODAL_NODES):
        return False
    return all(is_propositional(c) for c in f.children())


def logic_of(f: Formula) -> str:
    """"PL" for modality-free formulas, "ML" otherwise."""
    return "PL" if is_propositional(f) else "ML"


def all_paths(f: Formula) -> list[tuple[int, ...]]:
    """Every node position in ``f``, as child-index paths, preorder."""
    out: list[tuple[int, ...]] = []

    def visit(node: Formula, path: tuple[int, ...]) -> None:
        out.append(path)
        for i, child in enumerate(node.children()):
            visit(child, path + (i,))

    visit(f, ())
    return out


def subformula_at(f: Formula, path: tuple[int, ...]) -> Formula:
    node = f
    for i in path:
        node = node.children()[i]
    return node


def replace_at(f: Formula, path: tuple[int, ...], replacement: Formula) -> Formula:
    if not path:
        return replacement
    i, rest = path[0], path[1:]
    children = list(f.children())
    children[i] = replace_at(children[i], rest, replacement)
    return rebuild(f, tuple(children))


def conjoin(parts: list[Formula]) -> Formula:
    """Left-nested conjunction of ``parts`` (Top for the empty list)."""
    if not parts:
        return Top()
    out = parts[0]
    for part in parts[1:]:
        out = And(out, part)
    return out
