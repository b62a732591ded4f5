"""Formula text parsing for all three logics.

Concrete syntax (ASCII forms with Unicode equivalents in parentheses):

    ~ (¬)  & (∧)  | (∨)  -> (→)  <-> (↔)  [] (□)  <> (◇)
    constants: 1/true (⊤), 0/false (⊥)
    precedence: ~ [] <> quantifiers  >  &  >  |  >  ->  >  <->
    -> and <-> associate to the right, & and | to the left

First-order mode adds ``exists x``/``forall x`` (∃/∀, binding as tightly
as negation), predicate applications ``P(t, ...)``, infix equality, and
terms; identifiers starting with u-z are variables, numerals and other
lowercase identifiers are constants, applications are functions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ParseError, WrongLogicError
from . import ast, fol
from .clauses import Literal

_TOKEN_RE = re.compile(
    r"""
    (?P<WS>\s+)
  | (?P<IFF><->|↔)
  | (?P<IMP>->|→)
  | (?P<DIA><>|◇)
  | (?P<BOX>\[\]|□)
  | (?P<AND>&|∧)
  | (?P<OR>\||∨)
  | (?P<NOT>~|¬|!)
  | (?P<TOP>⊤)
  | (?P<BOT>⊥)
  | (?P<EXISTS>∃)
  | (?P<FORALL>∀)
  | (?P<LP>\()
  | (?P<RP>\))
  | (?P<COMMA>,)
  | (?P<EQ>=)
  | (?P<NUM>[0-9]+)
  | (?P<IDENT>[A-Za-z][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)

_KEYWORDS = {"true": "TOP", "false": "BOT"}
_FO_KEYWORDS = {"exists": "EXISTS", "forall": "FORALL"}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str, logic: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(
                f"unexpected character {text[pos]!r} at position {pos}", position=pos
            )
        kind = m.lastgroup
        value = m.group()
        if kind != "WS":
            if kind == "IDENT":
                kind = _KEYWORDS.get(value, kind)
                if logic == "FO":
                    kind = _FO_KEYWORDS.get(value, kind)
            tokens.append(Token(kind, value, pos))
        pos = m.end()
    tokens.append(Token("EOF", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token], logic: str):
        self.tokens = tokens
        self.logic = logic
        self.i = 0

    @property
    def cur(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.cur
        self.i += 1
        return tok

    def fail(self, expected: tuple[str, ...]):
        tok = self.cur
        found = tok.text if tok.kind != "EOF" else "end of input"
        raise ParseError(
            f"syntax error at position {tok.pos}: expected {', '.join(expected)},"
            f" found {found!r}",
            position=tok.pos,
            expected=expected,
        )

    def expect(self, kind: str, expected_desc: str) -> Token:
        if self.cur.kind != kind:
            self.fail((expected_desc,))
        return self.advance()

    # ---- shared connective ladder ----------------------------------------

    def formula(self):
        return self.iff()

    def iff(self):
        parts = [self.imp()]
        while self.cur.kind == "IFF":
            self.advance()
            parts.append(self.imp())
        return self._fold_right(parts, "Iff")

    def imp(self):
        parts = [self.disj()]
        while self.cur.kind == "IMP":
            self.advance()
            parts.append(self.disj())
        return self._fold_right(parts, "Implies")

    def disj(self):
        out = self.conj()
        while self.cur.kind == "OR":
            self.advance()
            out = self._node("Or")(out, self.conj())
        return out

    def conj(self):
        out = self.unary()
        while self.cur.kind == "AND":
            self.advance()
            out = self._node("And")(out, self.unary())
        return out

    def _fold_right(self, parts, name):
        node = self._node(name)
        out = parts[-1]
        for part in reversed(parts[:-1]):
            out = node(part, out)
        return out

    def _node(self, name):
        module = fol if self.logic == "FO" else ast
        return getattr(module, name)

    # ---- mode-specific pieces ---------------------------------------------

    def unary(self):
        tok = self.cur
        if tok.kind == "NOT":
            self.advance()
            return self._node("Not")(self.unary())
        if tok.kind in ("BOX", "DIA"):
            if self.logic != "ML":
                raise WrongLogicError(
                    f"modal operator {tok.text!r} at position {tok.pos} is not allowed"
                    f" in {self.logic} formulas",
                    position=tok.pos,
                )
            self.advance()
            node = ast.Box if tok.kind == "BOX" else ast.Diamond
            return node(self.unary())
        if tok.kind in ("EXISTS", "FORALL"):
            if self.logic != "FO":
                raise WrongLogicError(
                    f"quantifier at position {tok.pos} is not allowed in"
                    f" {self.logic} formulas",
                    position=tok.pos,
                )
            self.advance()
            name = self.expect("IDENT", "variable")
            if not fol.is_variable_name(name.text):
                raise ParseError(
                    f"quantified name {name.text!r} at position {name.pos} must start"
                    " with one of u-z",
                    position=name.pos,
                )
            body = self.unary()
            node = fol.Exists if tok.kind == "EXISTS" else fol.Forall
            return node(name.text, body)
        return self.primary()

    def primary(self):
        tok = self.cur
        if tok.kind == "LP":
            self.advance()
            inner = self.formula()
            self.expect("RP", "')'")
            return inner
        if tok.kind == "TOP":
            self.advance()
            return self._node("Top")()
        if tok.kind == "BOT":
            self.advance()
            return self._node("Bottom")()
        if tok.kind == "NUM":
            if self.logic == "FO":
                self.fail(("a formula",))
            self.advance()
            if tok.text == "1":
                return ast.Top()
            if tok.text == "0":
                return ast.Bottom()
            raise ParseError(
                f"numeric constant {tok.text!r} at position {tok.pos} (only 1 and 0"
                " denote truth values)",
                position=tok.pos,
            )
        if self.logic == "FO":
            return self.fo_atom()
        if tok.kind == "IDENT":
            self.advance()
            return ast.Atom(tok.text)
        self.fail(("an atom", "'('", "'~'"))

    # ---- first-order atoms and terms --------------------------------------

    def fo_atom(self):
        tok = self.cur
        if tok.kind not in ("IDENT", "NUM"):
            self.fail(("a predicate or term", "'('"))
        left = self.term()
        if self.cur.kind == "EQ":
            self.advance()
            right = self.term()
            return fol.Pred(fol.EQUALS, (self._as_term(left, tok), self._as_term(right, tok)))
        if isinstance(left, fol.Func):
            return fol.Pred(left.name, left.args)
        self.fail(("'='", "a predicate application"))

    def term(self):
        tok = self.cur
        if tok.kind == "NUM":
            self.advance()
            return fol.Const(tok.text)
        name = self.expect("IDENT", "a term")
        if self.cur.kind == "LP":
            self.advance()
            args = [self._as_term(self.term(), tok)]
            while self.cur.kind == "COMMA":
                self.advance()
                args.append(self._as_term(self.term(), tok))
            self.expect("RP", "')'")
            return fol.Func(name.text, tuple(args))
        if fol.is_variable_name(name.text):
            return fol.Var(name.text)
        return fol.Const(name.text)

    def _as_term(self, value, tok):
        if isinstance(value, fol.Term):
            return value
        raise ParseError(f"expected a term at position {tok.pos}", position=tok.pos)


def parse(text: str, logic: str = "PL"):
    """Parse ``text`` as a PL/ML formula or FO formula.

    Raises ParseError (with character position and expected-token set) on
    malformed input and WrongLogicError when an operator of another logic
    appears.
    """
    if logic not in ("PL", "ML", "FO"):
        raise ValueError(f"unknown logic {logic!r}")
    if not text or not text.strip():
        raise ParseError("empty formula text", position=0)
    parser = _Parser(tokenize(text, logic), logic)
    result = parser.formula()
    if parser.cur.kind != "EOF":
        parser.fail(("end of input",))
    return result


def parse_term(text: str) -> fol.Term:
    parser = _Parser(tokenize(text, "FO"), "FO")
    term = parser.term()
    if parser.cur.kind != "EOF":
        parser.fail(("end of input",))
    return term


def parse_literal(text: str) -> Literal:
    """Parse a signed literal such as ``x``, ``~x``, or ``~P(f(u), a)``."""
    parser = _Parser(tokenize(text, "FO"), "FO")
    positive = True
    while parser.cur.kind == "NOT":
        parser.advance()
        positive = not positive
    tok = parser.cur
    name = parser.expect("IDENT", "a predicate or atom name")
    args: tuple[fol.Term, ...] = ()
    if parser.cur.kind == "LP":
        parser.advance()
        collected = [parser.term()]
        while parser.cur.kind == "COMMA":
            parser.advance()
            collected.append(parser.term())
        parser.expect("RP", "')'")
        args = tuple(collected)
    if parser.cur.kind != "EOF":
        parser.fail(("end of input",))
    if not args and name.text in ("true", "false"):
        raise ParseError(
            f"{name.text!r} is not a literal", position=tok.pos
        )
    return Literal(name.text, args, positive)
