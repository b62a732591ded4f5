"""Exhaustive tableau driver.

Applies rules and closures through the public step operations until the
tableau status is decided, i.e. every branch is closed or some open branch
is saturated.  Used for verification (oracle cross-checks and fixture
generation); it is not reachable from the student-facing service.

Branch obligations are tracked incrementally per branch, so driving a
tableau costs roughly one pass per created node instead of a rescan per
step; the final status always agrees with ``tableau_status``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from ..errors import StateError
from ..formulas import ast
from .tableau import (
    ALPHA,
    BETA,
    BOX,
    DIAMOND,
    Tableau,
    TableauStatus,
    branch_leaves,
    branch_nodes,
    tableau_apply,
    tableau_close,
)


@dataclass
class AutoPlayResult:
    status: TableauStatus
    tableau: Tableau
    steps: list[dict] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        """"unsatisfiable" for a fully closed tableau, else "satisfiable"."""
        return "unsatisfiable" if self.status.kind == "all_closed" else "satisfiable"


class _Cursor:
    """Pending obligations of one open branch."""

    __slots__ = ("leaf", "queue", "boxes", "access", "box_pending", "literals", "clash")

    def __init__(self, leaf: int):
        self.leaf = leaf
        self.queue: deque = deque()  # node ids with a pending alpha/beta/diamond
        self.boxes: list = []  # box node ids seen on this branch
        self.access: dict = {}  # prefix -> prefixes reachable on this branch
        self.box_pending: deque = deque()  # (box node id, target prefix)
        self.literals: dict = {}  # (prefix, atom, sign) -> node id
        self.clash: tuple | None = None

    def clone(self, leaf: int) -> "_Cursor":
        other = _Cursor(leaf)
        other.queue = deque(self.queue)
        other.boxes = list(self.boxes)
        other.access = {k: list(v) for k, v in self.access.items()}
        other.box_pending = deque(self.box_pending)
        other.literals = dict(self.literals)
        other.clash = self.clash
        return other

    @property
    def saturated(self) -> bool:
        return self.clash is None and not self.queue and not self.box_pending

    def absorb(self, t: Tableau, node, applied: set | None = None) -> None:
        """Account for ``node`` appearing on this branch.

        ``applied`` carries (rule, premise, prefix) triples already present
        on the branch; it is only needed when seeding from an existing tree.
        """
        f = node.formula
        if node.rule == DIAMOND:
            source = t.nodes[node.premise].prefix
            self.access.setdefault(source, []).append(node.prefix)
            for box_id in self.boxes:
                if t.nodes[box_id].prefix == source:
                    if applied and (BOX, box_id, node.prefix) in applied:
                        continue
                    self.box_pending.append((box_id, node.prefix))
        if isinstance(f, ast.Bottom):
            if self.clash is None:
                self.clash = (node.id, None)
            return
        if isinstance(f, ast.Atom):
            self._literal(node.prefix, f.name, True, node.id)
            return
        if isinstance(f, ast.Not):  # NNF: the child is an atom
            self._literal(node.prefix, f.child.name, False, node.id)
            return
        if isinstance(f, ast.Top):
            return
        if isinstance(f, ast.Box):
            self.boxes.append(node.id)
            for target in self.access.get(node.prefix, []):
                if applied and (BOX, node.id, target) in applied:
                    continue
                self.box_pending.append((node.id, target))
            return
        rule = ALPHA if isinstance(f, ast.And) else BETA if isinstance(f, ast.Or) else DIAMOND
        if applied and (rule, node.id, None) in applied:
            return
        self.queue.append(node.id)

    def _literal(self, prefix: str, name: str, sign: bool, node_id: int) -> None:
        other = self.literals.get((prefix, name, not sign))
        if other is not None and self.clash is None:
            self.clash = (node_id, other) if sign else (other, node_id)
        self.literals.setdefault((prefix, name, sign), node_id)


def _seed_cursor(t: Tableau, leaf: int) -> _Cursor:
    chain = branch_nodes(t, leaf)
    applied = set()
    for node in chain:
        if node.rule in (ALPHA, BETA, DIAMOND):
            applied.add((node.rule, node.premise, None))
        elif node.rule == BOX:
            applied.add((BOX, node.premise, node.prefix))
    cursor = _Cursor(leaf)
    for node in chain:
        cursor.absorb(t, node, applied)
    return cursor


def autoplay(t: Tableau, max_steps: int = 100_000) -> AutoPlayResult:
    """Drive ``t`` until all branches are closed or one open branch saturates."""
    steps: list[dict] = []
    cursors = {
        leaf: _seed_cursor(t, leaf)
        for leaf in branch_leaves(t)
        if leaf not in t.closed
    }
    for _ in range(max_steps):
        if not cursors:
            return AutoPlayResult(TableauStatus("all_closed"), t, steps)
        saturated = [c for c in cursors.values() if c.saturated]
        if saturated:
            leaf = min(c.leaf for c in saturated)
            return AutoPlayResult(TableauStatus("open_saturated", leaf), t, steps)
        cursor = cursors[min(cursors)]
        if cursor.clash is not None:
            node_a, node_b = cursor.clash
            t, v = tableau_close(t, cursor.leaf, node_a, node_b)
            if not v.accepted:
                raise StateError(f"autoplay closure rejected: {v.message}")
            steps.append(
                {"action": "close", "branch": cursor.leaf, "node_a": node_a, "node_b": node_b}
            )
            del cursors[cursor.leaf]
            continue
        if cursor.box_pending:
            premise, target = cursor.box_pending.popleft()
            rule, prefix = BOX, target
        else:
            premise = cursor.queue.popleft()
            f = t.nodes[premise].formula
            rule = ALPHA if isinstance(f, ast.And) else BETA if isinstance(f, ast.Or) else DIAMOND
            prefix = None
        t, v = tableau_apply(t, premise, rule, cursor.leaf, prefix)
        if not v.accepted:
            raise StateError(f"autoplay step rejected: {v.message}")
        steps.append(
            {
                "action": "apply",
                "premise": premise,
                "rule": rule,
                "branch": cursor.leaf,
                "target_prefix": prefix,
            }
        )
        created = v.details["created"]
        del cursors[cursor.leaf]
        if rule == BETA:
            left, right = created
            for child in (left, right):
                branch_cursor = cursor if child == right else cursor.clone(child)
                branch_cursor.leaf = child
                branch_cursor.absorb(t, t.nodes[child])
                cursors[child] = branch_cursor
        else:
            cursor.leaf = created[-1]
            for child in created:
                cursor.absorb(t, t.nodes[child])
            cursors[cursor.leaf] = cursor
    raise StateError("autoplay did not terminate within the step budget")
