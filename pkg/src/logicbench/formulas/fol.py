"""First-order AST over terms and predicate applications.

Graph queries use the fixed colored-graph signature: the binary edge
relation ``E``, unary color predicates, and equality (predicate name "=").
Clause-level resolution additionally allows arbitrary predicate and
function symbols.  Identifiers whose first letter is one of u-z are
variables; other identifiers in term position are constants.
"""

from __future__ import annotations

from dataclasses import dataclass

EDGE = "E"
EQUALS = "="

_VARIABLE_INITIALS = "uvwxyz"


def is_variable_name(name: str) -> bool:
    return bool(name) and name[0] in _VARIABLE_INITIALS


class Term:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Var(Term):
    name: str


@dataclass(frozen=True, slots=True)
class Const(Term):
    name: str


@dataclass(frozen=True, slots=True)
class Func(Term):
    name: str
    args: tuple[Term, ...]


class FOFormula:
    __slots__ = ()

    def children(self) -> tuple["FOFormula", ...]:
        return ()


@dataclass(frozen=True, slots=True)
class Pred(FOFormula):
    name: str
    args: tuple[Term, ...]


@dataclass(frozen=True, slots=True)
class Top(FOFormula):
    pass


@dataclass(frozen=True, slots=True)
class Bottom(FOFormula):
    pass


@dataclass(frozen=True, slots=True)
class Not(FOFormula):
    child: FOFormula

    def children(self):
        return (self.child,)


@dataclass(frozen=True, slots=True)
class And(FOFormula):
    left: FOFormula
    right: FOFormula

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True, slots=True)
class Or(FOFormula):
    left: FOFormula
    right: FOFormula

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True, slots=True)
class Implies(FOFormula):
    left: FOFormula
    right: FOFormula

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True, slots=True)
class Iff(FOFormula):
    left: FOFormula
    right: FOFormula

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True, slots=True)
class Exists(FOFormula):
    var: str
    body: FOFormula

    def children(self):
        return (self.body,)


@dataclass(frozen=True, slots=True)
class Forall(FOFormula):
    var: str
    body: FOFormula

    def children(self):
        return (self.body,)


def term_variables(t: Term) -> frozenset[str]:
    if isinstance(t, Var):
        return frozenset((t.name,))
    if isinstance(t, Func):
        out: set[str] = set()
        for a in t.args:
            out |= term_variables(a)
        return frozenset(out)
    return frozenset()


def free_variables(f: FOFormula) -> frozenset[str]:
    if isinstance(f, Pred):
        out: set[str] = set()
        for a in f.args:
            out |= term_variables(a)
        return frozenset(out)
    if isinstance(f, (Exists, Forall)):
        return free_variables(f.body) - {f.var}
    out = set()
    for child in f.children():
        out |= free_variables(child)
    return frozenset(out)


def is_sentence(f: FOFormula) -> bool:
    return not free_variables(f)


def term_has_function(t: Term) -> bool:
    return isinstance(t, Func)


def graph_query_issues(f: FOFormula, colors: frozenset[str] | None = None) -> list[str]:
    """Why ``f`` is not a well-formed colored-graph query (empty list = ok).

    Checks arity of E and =, restricts other predicates to unary colors
    (limited to ``colors`` when given), and forbids function symbols.
    """
    issues: list[str] = []

    def visit(node: FOFormula) -> None:
        if isinstance(node, Pred):
            for a in node.args:
                if term_has_function(a):
                    issues.append(f"function symbols are not allowed in graph queries: {node.name}")
            if node.name == EDGE:
                if len(node.args) != 2:
                    issues.append("E takes exactly two arguments")
            elif node.name == EQUALS:
                if len(node.args) != 2:
                    issues.append("= takes exactly two arguments")
            else:
                if len(node.args) != 1:
                    issues.append(f"color predicate {node.name} must be unary")
                elif colors is not None and node.name not in colors:
                    issues.append(f"unknown color predicate {node.name}")
            return
        for child in node.children():
            visit(child)

    visit(f)
    return issues
