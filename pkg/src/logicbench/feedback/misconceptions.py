"""Misconception detection by position-parameterized rewrites.

A rule matches when rewriting the student formula at some position makes it
equivalent to the reference formula; the rule then names the likely error.
Compositions of two rewrites are searched as well, with the equivalence
checks capped to keep grading latency bounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..formulas import ast
from ..formulas.ast import (
    And,
    Box,
    Diamond,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
)
from .items import equivalence

ATOM_LIMIT = 10
CHECK_BUDGET = 4000


@dataclass(frozen=True)
class MisconceptionRule:
    id: str
    description: str
    hint: str
    explicit: str
    applies: Callable[[Formula], bool]
    rewrite: Callable[[Formula], Formula]


BUILTIN_RULES: tuple[MisconceptionRule, ...] = (
    MisconceptionRule(
        "implication_swap",
        "premise and conclusion of an implication are swapped",
        'Do you remember how "if"- and "only if"-statements are expressed?',
        'You might have mixed up "if" and "only if": the implication points the wrong way.',
        lambda f: isinstance(f, Implies),
        lambda f: Implies(f.right, f.left),
    ),
    MisconceptionRule(
        "and_or_confusion",
        "a conjunction and a disjunction are mixed up",
        "Check whether the statement requires both parts or just one of them.",
        "You might have mixed up 'and' with 'or'.",
        lambda f: isinstance(f, (And, Or)),
        lambda f: Or(f.left, f.right) if isinstance(f, And) else And(f.left, f.right),
    ),
    MisconceptionRule(
        "negation_drop",
        "the formula carries a spurious negation",
        "Count the negations: is the statement really negated here?",
        "There is one negation too many.",
        lambda f: isinstance(f, Not),
        lambda f: f.child,
    ),
    MisconceptionRule(
        "negation_insert",
        "a negation is missing",
        "Is some part of the statement negated that your formula affirms?",
        "A negation is missing.",
        lambda f: True,
        lambda f: Not(f),
    ),
    MisconceptionRule(
        "iff_for_implication",
        "biimplication and implication are mixed up",
        "Does the statement hold in both directions or only in one?",
        "You might have mixed up 'if and only if' with 'if ... then'.",
        lambda f: isinstance(f, (Implies, Iff)),
        lambda f: Iff(f.left, f.right) if isinstance(f, Implies) else Implies(f.left, f.right),
    ),
    MisconceptionRule(
        "box_diamond_swap",
        "necessity and possibility are mixed up",
        "Must this hold in every successor, or just in some?",
        "You might have mixed up the box with the diamond.",
        lambda f: isinstance(f, (Box, Diamond)),
        lambda f: Diamond(f.child) if isinstance(f, Box) else Box(f.child),
    ),
)

RULES_BY_ID = {rule.id: rule for rule in BUILTIN_RULES}


@dataclass(frozen=True)
class MisconceptionMatch:
    rules: tuple[str, ...]
    positions: tuple[tuple[int, ...], ...]
    rewritten: Formula
    depth: int

    @property
    def rule(self) -> MisconceptionRule:
        return RULES_BY_ID[self.rules[0]]

    @property
    def position(self) -> tuple[int, ...]:
        return self.positions[0]


def _applications(f: Formula, rules):
    for path in ast.all_paths(f):
        node = ast.subformula_at(f, path)
        for rule in rules:
            if rule.applies(node):
                rewritten = ast.replace_at(f, path, rule.rewrite(node))
                if rewritten != f:
                    yield rule.id, path, rewritten


def detect_misconceptions(
    student: Formula,
    target: Formula,
    rules=BUILTIN_RULES,
    max_depth: int = 2,
) -> list[MisconceptionMatch]:
    """All rewrites of ``student`` (up to ``max_depth`` composed steps) that
    are equivalent to ``target``, ordered by depth and then position.

    Returns the empty list for equivalent inputs and for formulas beyond the
    atom cap (misconception search is best-effort, correctness is not).
    """
    if len(ast.atoms(student) | ast.atoms(target)) > ATOM_LIMIT:
        return []
    if equivalence(student, target).equivalent:
        return []
    budget = CHECK_BUDGET
    matches: list[MisconceptionMatch] = []
    first_level = []
    for rule_id, path, rewritten in _applications(student, rules):
        first_level.append((rule_id, path, rewritten))
        if budget <= 0:
            continue
        budget -= 1
        if equivalence(rewritten, target).equivalent:
            matches.append(MisconceptionMatch((rule_id,), (path,), rewritten, 1))
    matches.sort(key=lambda m: m.positions)
    if max_depth < 2:
        return matches
    deep: list[MisconceptionMatch] = []
    for rule_id, path, rewritten in first_level:
        for rule2, path2, rewritten2 in _applications(rewritten, rules):
            if rewritten2 == student:
                continue
            if budget <= 0:
                break
            budget -= 1
            if equivalence(rewritten2, target).equivalent:
                deep.append(
                    MisconceptionMatch(
                        (rule_id, rule2), (path, path2), rewritten2, 2
                    )
                )
        if budget <= 0:
            break
    deep.sort(key=lambda m: m.positions)
    return matches + deep
