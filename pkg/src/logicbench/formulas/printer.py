"""Minimal-parenthesis rendering for formulas, terms, literals, and clauses.

``parse(render(f))`` is structurally equal to ``f`` for every AST.  ASCII
operators are emitted; the parser accepts both ASCII and Unicode.
"""

from __future__ import annotations

from . import ast, fol
from .clauses import Literal, Substitution

_PREC_IFF = 1
_PREC_IMP = 2
_PREC_OR = 3
_PREC_AND = 4
_PREC_UNARY = 5
_PREC_LEAF = 6

_BINARY = {
    ast.Iff: ("<->", _PREC_IFF, "right"),
    ast.Implies: ("->", _PREC_IMP, "right"),
    ast.Or: ("|", _PREC_OR, "left"),
    ast.And: ("&", _PREC_AND, "left"),
    fol.Iff: ("<->", _PREC_IFF, "right"),
    fol.Implies: ("->", _PREC_IMP, "right"),
    fol.Or: ("|", _PREC_OR, "left"),
    fol.And: ("&", _PREC_AND, "left"),
}

_UNARY = {
    ast.Not: "~",
    ast.Box: "[]",
    ast.Diamond: "<>",
    fol.Not: "~",
}


def _precedence(f) -> int:
    t = type(f)
    if t in _BINARY:
        return _BINARY[t][1]
    if t in _UNARY or isinstance(f, (fol.Exists, fol.Forall)):
        return _PREC_UNARY
    return _PREC_LEAF


class _Renderer:
    def __init__(self):
        self.pieces: list[str] = []
        self.length = 0
        self.spans: dict[tuple[int, ...], tuple[int, int]] = {}

    def emit(self, text: str) -> None:
        self.pieces.append(text)
        self.length += len(text)

    def node(self, f, path: tuple[int, ...]) -> None:
        start = self.length
        t = type(f)
        if t in _BINARY:
            symbol, prec, assoc = _BINARY[t]
            left, right = f.children()
            need_left = _precedence(left) < prec or (
                _precedence(left) == prec and assoc == "right"
            )
            need_right = _precedence(right) < prec or (
                _precedence(right) == prec and assoc == "left"
            )
            self.group(left, path + (0,), need_left)
            self.emit(f" {symbol} ")
            self.group(right, path + (1,), need_right)
        elif t in _UNARY:
            self.emit(_UNARY[t])
            child = f.children()[0]
            self.group(child, path + (0,), _precedence(child) < _PREC_UNARY)
        elif isinstance(f, (fol.Exists, fol.Forall)):
            self.emit(("exists " if isinstance(f, fol.Exists) else "forall ") + f.var + " ")
            self.group(f.body, path + (0,), _precedence(f.body) < _PREC_UNARY)
        elif isinstance(f, ast.Atom):
            self.emit(f.name)
        elif isinstance(f, ast.Top):
            self.emit("1")
        elif isinstance(f, ast.Bottom):
            self.emit("0")
        elif isinstance(f, fol.Top):
            self.emit("true")
        elif isinstance(f, fol.Bottom):
            self.emit("false")
        elif isinstance(f, fol.Pred):
            if f.name == fol.EQUALS:
                self.emit(render_term(f.args[0]))
                self.emit(" = ")
                self.emit(render_term(f.args[1]))
            else:
                self.emit(f.name)
                self.emit("(")
                self.emit(", ".join(render_term(a) for a in f.args))
                self.emit(")")
        else:
            raise TypeError(f"cannot render {type(f).__name__}")
        self.spans[path] = (start, self.length)

    def group(self, f, path: tuple[int, ...], parens: bool) -> None:
        if parens:
            self.emit("(")
        self.node(f, path)
        if parens:
            self.emit(")")


def render(f) -> str:
    """Formula text with the minimal parentheses the grammar requires."""
    r = _Renderer()
    r.node(f, ())
    return "".join(r.pieces)


def render_with_spans(f) -> tuple[str, dict[tuple[int, ...], tuple[int, int]]]:
    """Rendered text plus the character span of every subformula path."""
    r = _Renderer()
    r.node(f, ())
    return "".join(r.pieces), r.spans


def render_term(t: fol.Term) -> str:
    if isinstance(t, (fol.Var, fol.Const)):
        return t.name
    return f"{t.name}({', '.join(render_term(a) for a in t.args)})"


def render_literal(lit: Literal) -> str:
    sign = "" if lit.positive else "~"
    if not lit.args:
        return sign + lit.name
    return f"{sign}{lit.name}({', '.join(render_term(a) for a in lit.args)})"


def render_clause(clause) -> str:
    body = ", ".join(sorted(render_literal(lit) for lit in clause))
    return "{" + body + "}"


def render_substitution(sub: Substitution) -> str:
    body = ", ".join(
        f"{name} -> {render_term(term)}" for name, term in sorted(sub.items())
    )
    return "{" + body + "}"
