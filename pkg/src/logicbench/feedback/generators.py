"""Feedback generators: single-purpose producers composed by strategies.

Each generator maps a FeedbackContext to zero or more item drafts
(severity, message, payload).  Reveal ranks are assigned by the strategy
runner in emission order.
"""

from __future__ import annotations

from typing import Callable

from ..errors import FeedbackError
from ..formulas.printer import render, render_with_spans
from ..semantics.evaluate import check_model
from ..semantics.structures import ColoredGraph
from .items import ERROR, HINT, INFO, SUCCESS, FeedbackContext, FeedbackItem

Draft = tuple  # (severity, message, payload)

GENERATORS: dict[str, Callable[[FeedbackContext], list[Draft]]] = {}


def generator(name: str):
    def register(fn):
        GENERATORS[name] = fn
        return fn

    return register


@generator("correctness")
def correctness(ctx: FeedbackContext) -> list[Draft]:
    if ctx.is_correct:
        return [(SUCCESS, "Correct.", None)]
    payload = None
    if ctx.task_kind == "construct_model":
        result = check_model(ctx.target, ctx.answer)
        payload = {"trace": result.trace}
    if ctx.task_kind == "truth_table":
        from ..calculi.table_check import truth_table_check

        matrix = truth_table_check(ctx.target, ctx.answer)
        wrong = [
            cell.locus
            for row in matrix
            for cell in row
            if not cell.accepted
        ]
        payload = {"wrong_cells": wrong}
    return [(ERROR, "Not correct.", payload)]


def _first_misconception(ctx: FeedbackContext):
    matches = ctx.misconceptions()
    return matches[0] if matches else None


@generator("misconception_hint")
def misconception_hint(ctx: FeedbackContext) -> list[Draft]:
    match = _first_misconception(ctx)
    if match is None:
        return []
    return [(HINT, match.rule.hint, None)]


@generator("misconception_explicit")
def misconception_explicit(ctx: FeedbackContext) -> list[Draft]:
    match = _first_misconception(ctx)
    if match is None:
        return []
    return [(INFO, match.rule.explicit, None)]


@generator("misconception_position")
def misconception_position(ctx: FeedbackContext) -> list[Draft]:
    match = _first_misconception(ctx)
    if match is None:
        return []
    student = ctx.formula_pair()[0]
    text, spans = render_with_spans(student)
    span = spans.get(match.position)
    payload = {
        "formula": text,
        "position": list(match.position),
        "span": list(span) if span else None,
    }
    part = text[span[0] : span[1]] if span else render(student)
    return [(INFO, f"The mistake sits at \"{part}\".", payload)]


@generator("distinguishing_model")
def distinguishing_model(ctx: FeedbackContext) -> list[Draft]:
    """A valuation or pointed structure on which student and reference differ."""
    result = ctx.equivalence_result()
    if result.equivalent:
        return []
    witness = result.witness
    return [
        (
            INFO,
            "Your formula and the expected one differ on this interpretation.",
            {"witness": witness},
        )
    ]


@generator("subset_relation")
def subset_relation(ctx: FeedbackContext) -> list[Draft]:
    student, correct = ctx.node_sets()
    if student == correct:
        return []
    if student < correct:
        message = "Your formula selects a strict subset of the correct nodes."
    elif student > correct:
        message = "Your formula selects a strict superset of the correct nodes."
    else:
        message = "Your selection and the correct one are incomparable."
    return [(HINT, message, None)]


@generator("node_diff")
def node_diff(ctx: FeedbackContext) -> list[Draft]:
    student, correct = ctx.node_sets()
    if student == correct:
        return []
    payload = {
        "missing": sorted(correct - student),
        "extra": sorted(student - correct),
    }
    return [
        (
            INFO,
            f"Missing: {', '.join(payload['missing']) or 'none'}."
            f" Wrongly selected: {', '.join(payload['extra']) or 'none'}.",
            payload,
        )
    ]


def run_generator(name: str, ctx: FeedbackContext) -> list[Draft]:
    fn = GENERATORS.get(name)
    if fn is None:
        raise FeedbackError(f"unknown feedback generator {name!r}")
    return fn(ctx)


def node_set_feedback(
    student_set, correct_set, graph: ColoredGraph
) -> list[FeedbackItem]:
    """Correct/incorrect, subset relation, and visual node diff for a
    student-selected node set, with consecutive reveal ranks."""
    ctx = FeedbackContext(
        task_kind="choose_variables",
        answer=frozenset(str(n) for n in student_set),
        target=frozenset(str(n) for n in correct_set),
        graph=graph,
    )
    items: list[FeedbackItem] = []
    for name in ("correctness", "subset_relation", "node_diff"):
        for severity, message, payload in run_generator(name, ctx):
            items.append(FeedbackItem(name, severity, message, len(items), payload))
    return items


def generate_distinguishing_model(ctx: FeedbackContext) -> FeedbackItem | None:
    """Single-item form of the distinguishing-model generator."""
    drafts = distinguishing_model(ctx)
    if not drafts:
        return None
    severity, message, payload = drafts[0]
    return FeedbackItem("distinguishing_model", severity, message, 0, payload)
