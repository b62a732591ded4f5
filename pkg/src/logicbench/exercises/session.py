"""Session state machine: one student working through one exercise.

Construction tasks are graded through feedback strategies; step tasks
verify each proof step through the calculi and stay active until their
completion condition holds.  Rejected submissions never change the binding
environment, the current task, or the proof state.
"""

from __future__ import annotations

import secrets
from dataclasses import dataclass, field
from typing import Any

from ..calculi import bisim_run, horn_run, resolution, table_check, tableau
from ..errors import KindMismatchError, StateError
from ..feedback.items import ERROR, HINT, INFO, SUCCESS, FeedbackContext, FeedbackItem
from ..feedback.strategy import resolve_strategy, run_strategy
from ..formulas import ast, fol
from ..formulas.ast import And, Formula, Not
from ..formulas.normal_forms import NormalFormKind
from ..formulas.printer import render_clause, render_literal
from ..semantics.evaluate import eval_ml, eval_pl
from .model import ExerciseSpec, TaskSpec, TaskValue
from .steps import (
    BisimConclude,
    BisimRemove,
    HornConclude,
    HornMark,
    ResolveFo,
    ResolvePl,
    TableauApply,
    TableauClose,
)
from .validate import validate_exercise

DEFAULT_STRATEGIES = {
    "construct_formula": "formula_construction",
    "transform": "formula_construction",
    "fo_query": "node_set",
    "choose_variables": "node_set",
}

STEP_GENERATOR = "step_check"


@dataclass(frozen=True)
class TransitionResult:
    kind: str  # "stay" | "advance" | "finish"
    task: str | None = None


@dataclass
class SessionState:
    exercise: ExerciseSpec
    session_id: str
    current_task: str | None
    status: str = "active"
    env: dict = field(default_factory=dict)  # (task id, port) -> TaskValue
    proof_states: dict = field(default_factory=dict)  # task id -> state
    last_task: str | None = None
    last_items: list = field(default_factory=list)
    revealed: int = -1

    def bound(self, task_id: str, port: str) -> TaskValue:
        return self.env[(task_id, port)]


def new_session_id() -> str:
    return secrets.token_hex(16)


def start_session(spec: ExerciseSpec, session_id: str | None = None) -> SessionState:
    """Fresh session at the first task.  Raises ValueError on invalid specs."""
    problems = validate_exercise(spec)
    if problems:
        raise ValueError(
            "invalid exercise: " + "; ".join(str(p) for p in problems)
        )
    session = SessionState(
        exercise=spec,
        session_id=session_id or new_session_id(),
        current_task=spec.tasks[0].id,
    )
    _enter_task(session, spec.tasks[0])
    return session


def resolve_inputs(session: SessionState, task: TaskSpec) -> dict[str, TaskValue]:
    resolved = {}
    for port, binding in task.inputs.items():
        if binding.value is not None:
            resolved[port] = binding.value
        else:
            resolved[port] = session.bound(*binding.ref)
    return resolved


def _enter_task(session: SessionState, task: TaskSpec) -> None:
    if task.id in session.proof_states:
        return
    inputs = resolve_inputs(session, task)
    if task.kind == "tableau":
        logic = task.config.get("logic", "ML")
        session.proof_states[task.id] = tableau.new_tableau(
            [inputs["formula"].value], logic
        )
    elif task.kind == "hornsat":
        session.proof_states[task.id] = horn_run.new_horn_state(inputs["formula"].value)
    elif task.kind in ("resolution_pl", "resolution_fo"):
        logic = "PL" if task.kind == "resolution_pl" else "FO"
        clauses = sorted(inputs["clauses"].value, key=render_clause)
        session.proof_states[task.id] = resolution.new_resolution_graph(clauses, logic)
    elif task.kind == "bisimulation":
        session.proof_states[task.id] = bisim_run.new_bisim_state(
            inputs["k1"].value, inputs["k2"].value
        )


def submit(session: SessionState, answer) -> tuple[list[FeedbackItem], TransitionResult]:
    """Grade ``answer`` for the current task.

    Returns the full feedback item list (rank 0 is auto-shown, later ranks
    wait for reveal_next) and the transition taken.
    """
    if session.status != "active":
        raise StateError("the session is finished")
    task = session.exercise.task(session.current_task)
    handler = _HANDLERS.get(task.kind)
    if handler is None:
        raise StateError(f"no handler for task kind {task.kind!r}")
    outcome = handler(session, task, answer)
    session.last_task = task.id
    session.last_items = list(outcome.items)
    session.revealed = 0 if outcome.items else -1
    if outcome.proof_state is not None:
        session.proof_states[task.id] = outcome.proof_state
    if not outcome.advance:
        return outcome.items, TransitionResult("stay")
    for port, value in outcome.outputs.items():
        session.env[(task.id, port)] = value
    transition = _take_transition(session, task)
    if transition.target is None:
        session.status = "finished"
        session.current_task = None
        return outcome.items, TransitionResult("finish")
    session.current_task = transition.target
    _enter_task(session, session.exercise.task(transition.target))
    return outcome.items, TransitionResult("advance", transition.target)


def reveal_next(session: SessionState) -> FeedbackItem | None:
    """Uncover the next feedback item of the last submission, if any."""
    if session.revealed + 1 < len(session.last_items):
        session.revealed += 1
        return session.last_items[session.revealed]
    return None


def _take_transition(session: SessionState, task: TaskSpec):
    for tr in session.exercise.transitions_for(task.id):
        if tr.guard is None or _guard_holds(session, tr.guard):
            return tr
    raise StateError(f"no transition applies after task {task.id}")


def _guard_holds(session: SessionState, guard) -> bool:
    if guard.kind == "always":
        return True
    bound = session.env.get((guard.task, guard.port))
    if bound is None:
        return False
    return bound.value == guard.value


# ---- handlers ----------------------------------------------------------------


@dataclass
class HandlerOutcome:
    items: list[FeedbackItem]
    advance: bool
    outputs: dict[str, TaskValue] = field(default_factory=dict)
    proof_state: Any = None


def _expect_value(answer, kinds: tuple[str, ...], what: str) -> TaskValue:
    if not isinstance(answer, TaskValue):
        raise KindMismatchError(f"expected {what}, got {type(answer).__name__}")
    if answer.kind not in kinds:
        raise KindMismatchError(f"expected {what}, got a value of kind {answer.kind}")
    return answer


def _strategy_for(task: TaskSpec):
    configured = task.config.get("strategy")
    if configured is not None:
        return resolve_strategy(configured)
    return resolve_strategy(DEFAULT_STRATEGIES.get(task.kind, "correctness_only"))


def _graded(task: TaskSpec, ctx: FeedbackContext, outputs=None) -> HandlerOutcome:
    items = run_strategy(_strategy_for(task), ctx)
    return HandlerOutcome(items, ctx.is_correct, outputs() if ctx.is_correct and outputs else {})


def _check_logic(f: Formula, logic: str) -> None:
    if logic == "PL" and not ast.is_propositional(f):
        raise KindMismatchError("a propositional formula is expected here")


def _handle_construct_formula(session, task, answer):
    targets = task.config["targets"]
    logic = task.config.get("logic", "PL")
    if len(targets) > 1:
        value = _expect_value(answer, ("formula_list",), f"{len(targets)} formulas")
        formulas = list(value.value)
        if len(formulas) != len(targets):
            raise KindMismatchError(
                f"expected {len(targets)} formulas, got {len(formulas)}"
            )
        for f in formulas:
            _check_logic(f, logic)
        ctx = FeedbackContext(
            "construct_formula", answer=formulas, target=list(targets), logic=logic
        )
        out = ast.conjoin(formulas)
    else:
        value = _expect_value(answer, ("formula",), "a formula")
        _check_logic(value.value, logic)
        ctx = FeedbackContext(
            "construct_formula", answer=value.value, target=targets[0], logic=logic
        )
        out = value.value
    return _graded(task, ctx, lambda: {"formula": TaskValue("formula", out)})


def _handle_construct_model(session, task, answer):
    formula = resolve_inputs(session, task)["formula"].value
    if isinstance(formula, fol.FOFormula):
        value = _expect_value(answer, ("graph",), "a colored graph")
    elif ast.is_propositional(formula):
        value = _expect_value(answer, ("valuation",), "a valuation")
    else:
        value = _expect_value(answer, ("kripke",), "a pointed Kripke structure")
        if value.value.designated is None:
            raise KindMismatchError("the model needs a designated world")
    ctx = FeedbackContext("construct_model", answer=value.value, target=formula)
    return _graded(task, ctx, lambda: {"model": value})


def _handle_evaluate(session, task, answer):
    inputs = resolve_inputs(session, task)
    formula = inputs["formula"].value
    interp = inputs["interpretation"]
    value = _expect_value(answer, ("boolean",), "a truth value")
    if interp.kind == "valuation":
        expected = eval_pl(formula, interp.value)
    else:
        world = task.config.get("world", interp.value.designated)
        expected = eval_ml(formula, interp.value, world)
    ctx = FeedbackContext("evaluate", answer=value.value, target=expected)
    return _graded(task, ctx, lambda: {"answer": value})


def _transform_source(session, task) -> Formula:
    inputs = resolve_inputs(session, task)
    if "formula" in inputs:
        return inputs["formula"].value
    premises = inputs["premises"].value
    consequence = inputs["consequence"].value
    return And(premises, Not(consequence))


def _handle_transform(session, task, answer):
    value = _expect_value(answer, ("formula",), "a formula")
    source = _transform_source(session, task)
    required = task.config.get("required_form")
    if required is not None:
        required = NormalFormKind(required)
    ctx = FeedbackContext(
        "transform",
        answer=value.value,
        source=source,
        required_form=required,
        target=task.config.get("target"),
        logic=task.config.get("logic"),
    )
    return _graded(task, ctx, lambda: {"formula": value})


def _handle_truth_table(session, task, answer):
    formula = resolve_inputs(session, task)["formula"].value
    value = _expect_value(answer, ("truth_table",), "a truth table")
    ctx = FeedbackContext("truth_table", answer=value.value, target=formula)
    try:
        _ = ctx.is_correct  # force the shape check before grading
    except StateError as e:
        raise KindMismatchError(f"table shape mismatch: {e}") from e
    return _graded(task, ctx)


def _handle_multiple_choice(session, task, answer):
    options = task.config["options"]
    value = _expect_value(answer, ("choice",), "a choice index")
    if not 0 <= value.value < len(options):
        raise KindMismatchError(
            f"choice index {value.value} out of range for {len(options)} options"
        )
    ctx = FeedbackContext(
        "multiple_choice", answer=value.value, target=task.config.get("correct")
    )
    return _graded(task, ctx, lambda: {"choice": value})


def _handle_messaging(session, task, answer):
    return HandlerOutcome([], True)


def _handle_choose_variables(session, task, answer):
    value = _expect_value(answer, ("node_set",), "a set of variable names")
    palette = {str(v) for v in task.config["palette"]}
    stray = set(value.value) - palette
    if stray:
        raise KindMismatchError(f"names outside the palette: {sorted(stray)}")
    ctx = FeedbackContext(
        "choose_variables", answer=value.value, target=task.config["correct"]
    )
    return _graded(task, ctx, lambda: {"variables": value})


def _handle_fo_query(session, task, answer):
    graph = resolve_inputs(session, task)["graph"].value
    value = _expect_value(answer, ("fo_formula",), "a first-order formula")
    free = fol.free_variables(value.value)
    issues = fol.graph_query_issues(value.value)
    if len(free) != 1:
        issues.insert(0, f"the query must have exactly one free variable, found {sorted(free)}")
    if issues:
        items = [FeedbackItem("correctness", ERROR, issues[0], 0, {"issues": issues})]
        return HandlerOutcome(items, False)
    target = task.config.get("target_query")
    if target is None:
        target = frozenset(str(n) for n in task.config["correct_nodes"])
    ctx = FeedbackContext("fo_query", answer=value.value, target=target, graph=graph)
    from ..semantics.evaluate import query_nodes

    return _graded(
        task,
        ctx,
        lambda: {
            "formula": value,
            "nodes": TaskValue("node_set", query_nodes(value.value, graph)),
        },
    )


def _handle_distinguish_worlds(session, task, answer):
    inputs = resolve_inputs(session, task)
    value = _expect_value(answer, ("formula",), "a modal formula")
    k1, k2 = inputs["k1"].value, inputs["k2"].value
    w1, w2 = str(task.config["world1"]), str(task.config["world2"])
    ctx = FeedbackContext(
        "distinguish_worlds", answer=value.value, target=((k1, w1), (k2, w2))
    )
    return _graded(task, ctx, lambda: {"formula": value})


# ---- step tasks ---------------------------------------------------------------


def _verdict_items(verdict, accepted_message="Step accepted.") -> list[FeedbackItem]:
    if verdict.accepted:
        return [FeedbackItem(STEP_GENERATOR, SUCCESS, accepted_message, 0)]
    items = [
        FeedbackItem(
            STEP_GENERATOR,
            ERROR,
            verdict.message,
            0,
            {"reason": verdict.reason, "locus": verdict.locus},
        )
    ]
    correct = verdict.details.get("correct_resolvent")
    if correct is not None:
        items.append(
            FeedbackItem(
                STEP_GENERATOR,
                HINT,
                f"The correct resolvent would be {render_clause(correct)}.",
                1,
                {"correct_resolvent": sorted(render_literal(l) for l in correct)},
            )
        )
    return items


def _handle_tableau(session, task, answer):
    state = session.proof_states[task.id]
    if isinstance(answer, TableauApply):
        new_state, verdict = tableau.tableau_apply(
            state, answer.premise, answer.rule, answer.branch, answer.target_prefix
        )
    elif isinstance(answer, TableauClose):
        new_state, verdict = tableau.tableau_close(
            state, answer.branch, answer.node_a, answer.node_b
        )
    else:
        raise KindMismatchError("expected a tableau step")
    items = _verdict_items(verdict)
    if not verdict.accepted:
        return HandlerOutcome(items, False)
    status = tableau.tableau_status(new_state)
    if status.kind == "incomplete":
        return HandlerOutcome(items, False, proof_state=new_state)
    label = (
        "all branches are closed"
        if status.kind == "all_closed"
        else f"branch {status.branch} is open and saturated"
    )
    items.append(
        FeedbackItem(STEP_GENERATOR, INFO, f"The tableau is complete: {label}.", len(items))
    )
    return HandlerOutcome(items, True, proof_state=new_state)


def _handle_hornsat(session, task, answer):
    state = session.proof_states[task.id]
    if isinstance(answer, HornMark):
        new_state, verdict = horn_run.horn_step(state, answer.variable, answer.clause_index)
        done = False
    elif isinstance(answer, HornConclude):
        new_state, verdict = horn_run.horn_conclude(state, answer.claim)
        done = verdict.accepted
    else:
        raise KindMismatchError("expected a HornSat step")
    items = _verdict_items(verdict)
    if not verdict.accepted:
        return HandlerOutcome(items, False)
    return HandlerOutcome(items, done, proof_state=new_state)


def _handle_resolution(session, task, answer):
    state = session.proof_states[task.id]
    if task.kind == "resolution_pl":
        if not isinstance(answer, ResolvePl):
            raise KindMismatchError("expected a propositional resolution step")
        new_state, verdict = resolution.resolve_pl(
            state, answer.parent1, answer.parent2, answer.pivot, answer.resolvent
        )
    else:
        if not isinstance(answer, ResolveFo):
            raise KindMismatchError("expected a first-order resolution step")
        new_state, verdict = resolution.resolve_fo(
            state,
            answer.parent1,
            answer.sub1,
            answer.parent2,
            answer.sub2,
            answer.pivot1,
            answer.pivot2,
            answer.resolvent,
        )
    items = _verdict_items(verdict)
    if not verdict.accepted:
        return HandlerOutcome(items, False)
    if verdict.details.get("empty_clause"):
        items.append(
            FeedbackItem(
                STEP_GENERATOR, INFO, "The empty clause is derived: unsatisfiable.", len(items)
            )
        )
        return HandlerOutcome(items, True, proof_state=new_state)
    return HandlerOutcome(items, False, proof_state=new_state)


def _handle_bisimulation(session, task, answer):
    state = session.proof_states[task.id]
    if isinstance(answer, BisimRemove):
        new_state, verdict = bisim_run.bisim_remove(
            state,
            answer.pair,
            bisim_run.RemovalJustification(answer.kind, answer.successor),
        )
        done = False
    elif isinstance(answer, BisimConclude):
        new_state, verdict = bisim_run.bisim_conclude(state, answer.relation)
        done = verdict.accepted
    else:
        raise KindMismatchError("expected a bisimulation step")
    items = _verdict_items(verdict)
    if not verdict.accepted:
        return HandlerOutcome(items, False)
    return HandlerOutcome(items, done, proof_state=new_state)


_HANDLERS = {
    "construct_formula": _handle_construct_formula,
    "construct_model": _handle_construct_model,
    "evaluate": _handle_evaluate,
    "transform": _handle_transform,
    "truth_table": _handle_truth_table,
    "multiple_choice": _handle_multiple_choice,
    "messaging": _handle_messaging,
    "choose_variables": _handle_choose_variables,
    "fo_query": _handle_fo_query,
    "distinguish_worlds": _handle_distinguish_worlds,
    "tableau": _handle_tableau,
    "hornsat": _handle_hornsat,
    "resolution_pl": _handle_resolution,
    "resolution_fo": _handle_resolution,
    "bisimulation": _handle_bisimulation,
}
