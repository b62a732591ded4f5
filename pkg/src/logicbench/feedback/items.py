"""Feedback items and the grading context generators read from."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..errors import FeedbackError
from ..formulas import ast
from ..formulas.ast import Formula
from ..formulas.fol import FOFormula
from ..reasoning.bisim import distinguishes
from ..reasoning.modal import ml_equivalent
from ..reasoning.sat import EquivResult, pl_equivalent
from ..semantics.evaluate import check_model, query_nodes
from ..semantics.structures import ColoredGraph

SEVERITIES = ("info", "hint", "error", "success")

INFO = "info"
HINT = "hint"
ERROR = "error"
SUCCESS = "success"


@dataclass(frozen=True)
class FeedbackItem:
    generator: str
    severity: str
    message: str
    reveal_rank: int
    payload: Any = None


def equivalence(f: Formula, g: Formula) -> EquivResult:
    """PL or ML equivalence, picked by the formulas' logic."""
    if ast.is_propositional(f) and ast.is_propositional(g):
        return pl_equivalent(f, g)
    return ml_equivalent(f, g)


@dataclass
class FeedbackContext:
    """Everything the generators of one submission may look at.

    ``target`` holds the instructor's solution object; its shape depends on
    the task kind (formula, list of formulas, node set, expected boolean,
    correct choice, world pair).  Expensive analyses are computed once and
    cached on the context.
    """

    task_kind: str
    answer: Any = None
    target: Any = None
    logic: str | None = None
    graph: ColoredGraph | None = None
    source: Formula | None = None
    required_form: Any = None
    config: dict = field(default_factory=dict)

    _correct: bool | None = field(default=None, repr=False)
    _pair: tuple | None = field(default=None, repr=False)
    _equiv: EquivResult | None = field(default=None, repr=False)
    _sets: tuple | None = field(default=None, repr=False)
    _misconceptions: list | None = field(default=None, repr=False)

    # ---- correctness ------------------------------------------------------

    @property
    def is_correct(self) -> bool:
        if self._correct is None:
            self._correct = self._compute_correct()
        return self._correct

    def _compute_correct(self) -> bool:
        kind = self.task_kind
        if kind == "construct_formula":
            pairs = self._formula_pairs()
            return all(equivalence(a, t).equivalent for a, t in pairs)
        if kind == "transform":
            from ..formulas.normal_forms import check_normal_form

            if not equivalence(self.answer, self.source).equivalent:
                return False
            if self.required_form is not None:
                return check_normal_form(self.answer, self.required_form)
            if self.target is not None:
                return equivalence(self.answer, self.target).equivalent
            return True
        if kind == "fo_query":
            student, correct = self.node_sets()
            return student == correct
        if kind == "choose_variables":
            student, correct = self.node_sets()
            return student == correct
        if kind == "construct_model":
            return check_model(self.target, self.answer).satisfies
        if kind == "evaluate":
            return bool(self.answer) == bool(self.target)
        if kind == "multiple_choice":
            if self.target is None:
                return True
            allowed = self.target if isinstance(self.target, (list, tuple, set)) else (self.target,)
            return self.answer in allowed
        if kind == "distinguish_worlds":
            pointed1, pointed2 = self.target
            return distinguishes(self.answer, pointed1, pointed2)
        if kind == "truth_table":
            from ..calculi.table_check import table_all_correct, truth_table_check

            return table_all_correct(truth_table_check(self.target, self.answer))
        raise FeedbackError(f"no correctness notion for task kind {self.task_kind!r}")

    # ---- formula-pair analyses ---------------------------------------------

    def _formula_pairs(self) -> list[tuple[Formula, Formula]]:
        if isinstance(self.target, (list, tuple)):
            answers = self.answer if isinstance(self.answer, (list, tuple)) else [self.answer]
            if len(answers) != len(self.target):
                raise FeedbackError(
                    f"expected {len(self.target)} formulas, got {len(answers)}"
                )
            return list(zip(answers, self.target))
        return [(self.answer, self.target)]

    def formula_pair(self) -> tuple[Formula, Formula] | None:
        """(student formula, reference formula) the detail generators analyze."""
        if self._pair is not None:
            return self._pair
        if self.task_kind == "construct_formula":
            for a, t in self._formula_pairs():
                if not equivalence(a, t).equivalent:
                    self._pair = (a, t)
                    return self._pair
            self._pair = self._formula_pairs()[0]
            return self._pair
        if self.task_kind == "transform":
            self._pair = (self.answer, self.source)
            return self._pair
        return None

    def equivalence_result(self) -> EquivResult:
        if self._equiv is None:
            pair = self.formula_pair()
            if pair is None:
                raise FeedbackError(
                    f"task kind {self.task_kind!r} has no formula pair to compare"
                )
            self._equiv = equivalence(pair[0], pair[1])
        return self._equiv

    def misconceptions(self):
        if self._misconceptions is None:
            from .misconceptions import detect_misconceptions

            pair = self.formula_pair()
            if pair is None:
                raise FeedbackError(
                    f"task kind {self.task_kind!r} supports no misconception analysis"
                )
            self._misconceptions = detect_misconceptions(pair[0], pair[1])
        return self._misconceptions

    # ---- node-set analyses ---------------------------------------------------

    def node_sets(self) -> tuple[frozenset, frozenset]:
        """(student set, correct set) for set-valued tasks."""
        if self._sets is not None:
            return self._sets
        if self.task_kind == "fo_query":
            if not isinstance(self.answer, FOFormula):
                raise FeedbackError("the answer of a graph-query task must be an FO formula")
            student = query_nodes(self.answer, self.graph)
            if isinstance(self.target, FOFormula):
                correct = query_nodes(self.target, self.graph)
            else:
                correct = frozenset(str(n) for n in self.target)
            self._sets = (student, correct)
            return self._sets
        if self.task_kind == "choose_variables":
            self._sets = (
                frozenset(str(v) for v in self.answer),
                frozenset(str(v) for v in self.target),
            )
            return self._sets
        raise FeedbackError(f"task kind {self.task_kind!r} has no node sets")
