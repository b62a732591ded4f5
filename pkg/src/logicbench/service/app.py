"""HTTP/JSON facade over the exercise engine.

Endpoints:

    GET  /health
    GET  /exercises
    POST /exercises/{exercise_id}/sessions
    GET  /sessions/{session_id}
    POST /sessions/{session_id}/submit     body: {"answer": <tagged value>} or {"step": <step>}
    POST /sessions/{session_id}/reveal
    GET  /stats/usage

Errors come back as ``{"code", "message", "locus"}``: 404 for unknown ids,
409 for kind mismatches and finished sessions, 422 for schema violations.
A static client bundle is served under ``/app`` when a directory is given.
"""

from __future__ import annotations

import secrets
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .. import jsonio
from ..calculi.horn_run import HornMarkingState
from ..calculi.tableau import Tableau, open_branches, tableau_status
from ..errors import KindMismatchError, SchemaError, StateError
from ..exercises.model import ExerciseSpec, TaskSpec
from ..exercises.session import SessionState, resolve_inputs, reveal_next, submit
from .analytics import compute_usage
from .store import AccessLog, SessionStore

CLIENT_HEADER = "X-Client-Id"

_PUBLIC_CONFIG = {
    "construct_formula": ("prompt", "statements", "logic"),
    "construct_model": ("prompt", "logic"),
    "evaluate": ("prompt", "world"),
    "transform": ("prompt", "required_form", "logic"),
    "truth_table": ("prompt", "atom_order"),
    "hornsat": ("prompt",),
    "tableau": ("prompt", "logic"),
    "resolution_pl": ("prompt",),
    "resolution_fo": ("prompt",),
    "bisimulation": ("prompt",),
    "distinguish_worlds": ("prompt", "world1", "world2"),
    "multiple_choice": ("prompt", "options"),
    "messaging": ("text",),
    "choose_variables": ("prompt", "palette"),
    "fo_query": ("prompt", "description", "colors"),
}


def _error(status: int, code: str, message: str, locus=None) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"code": code, "message": message, "locus": locus},
    )


def _task_view(session: SessionState, task: TaskSpec) -> dict:
    view: dict = {
        "id": task.id,
        "kind": task.kind,
        "config": {
            key: task.config[key]
            for key in _PUBLIC_CONFIG.get(task.kind, ())
            if key in task.config
        },
        "inputs": {
            port: jsonio.encode_task_value(value)
            for port, value in resolve_inputs(session, task).items()
        },
    }
    state = session.proof_states.get(task.id)
    if state is not None:
        view["proof_state"] = jsonio.encode_proof_state(state)
        view["derived"] = _derived_view(state)
    elif task.kind == "truth_table":
        # table skeleton (atom order, subformula columns, row count), no values
        from ..formulas.printer import render
        from ..semantics.tables import build_truth_table

        formula = resolve_inputs(session, task)["formula"].value
        table = build_truth_table(formula, task.config.get("atom_order"))
        view["derived"] = {
            "atoms": list(table.atoms),
            "columns": [render(c) for c in table.columns],
            "rows": len(table.rows),
        }
    return view


def _derived_view(state) -> dict:
    if isinstance(state, Tableau):
        status = tableau_status(state)
        return {
            "open_branches": list(open_branches(state)),
            "status": status.kind,
            "saturated_branch": status.branch,
        }
    if isinstance(state, HornMarkingState):
        clauses = []
        for c in state.clauses:
            premise = " & ".join(c.premises) if c.premises else "1"
            conclusion = c.conclusion if c.conclusion is not None else "0"
            clauses.append(
                {
                    "premises": list(c.premises),
                    "conclusion": c.conclusion,
                    "text": f"{premise} -> {conclusion}",
                }
            )
        return {
            "clauses": clauses,
            "marked": sorted(state.marked),
            "claim": state.claim,
        }
    return {}


def _session_view(session: SessionState) -> dict:
    revealed_items = session.last_items[: session.revealed + 1]
    view = {
        "session_id": session.session_id,
        "exercise_id": session.exercise.id,
        "title": session.exercise.title,
        "description": session.exercise.description,
        "status": session.status,
        "current_task": None,
        "feedback": [jsonio.encode_feedback_item(i) for i in revealed_items],
        "feedback_task": session.last_task,
        "has_more_feedback": session.revealed + 1 < len(session.last_items),
    }
    if session.current_task is not None:
        view["current_task"] = _task_view(session, session.exercise.task(session.current_task))
    return view


def create_app(
    exercises: dict[str, ExerciseSpec],
    data_dir,
    static_dir=None,
) -> FastAPI:
    app = FastAPI(title="logicbench", docs_url=None, redoc_url=None)
    store = SessionStore(data_dir, exercises)
    access_log = AccessLog(data_dir)
    app.state.store = store
    app.state.access_log = access_log

    def _track(request: Request, response: Response) -> None:
        client = request.headers.get(CLIENT_HEADER) or secrets.token_hex(8)
        access_log.record(client)
        response.headers[CLIENT_HEADER] = client

    @app.get("/health")
    async def health():
        return {"status": "ok"}

    @app.get("/exercises")
    async def list_exercises(request: Request, response: Response):
        _track(request, response)
        return [
            {
                "id": spec.id,
                "title": spec.title,
                "description": spec.description,
                "tasks": len(spec.tasks),
            }
            for spec in sorted(store.exercises.values(), key=lambda s: s.id)
        ]

    @app.post("/exercises/{exercise_id}/sessions", status_code=201)
    async def create_session(exercise_id: str, request: Request, response: Response):
        _track(request, response)
        try:
            session = store.create(exercise_id)
        except KeyError:
            return _error(404, "unknown_exercise", f"no exercise {exercise_id!r}")
        return _session_view(session)

    @app.get("/sessions/{session_id}")
    async def get_session(session_id: str, request: Request, response: Response):
        _track(request, response)
        session = store.get(session_id)
        if session is None:
            return _error(404, "unknown_session", f"no session {session_id!r}")
        return _session_view(session)

    @app.post("/sessions/{session_id}/submit")
    async def submit_answer(session_id: str, request: Request, response: Response):
        _track(request, response)
        session = store.get(session_id)
        if session is None:
            return _error(404, "unknown_session", f"no session {session_id!r}")
        try:
            body = await request.json()
        except Exception:
            return _error(422, "schema", "the request body is not valid JSON")
        if not isinstance(body, dict):
            return _error(422, "schema", "expected a JSON object")
        try:
            answer = _decode_answer(body)
        except SchemaError as e:
            return _error(422, "schema", str(e), e.path)
        with store.lock_for(session_id):
            try:
                items, transition = submit(session, answer)
            except KindMismatchError as e:
                return _error(409, "kind_mismatch", str(e))
            except StateError as e:
                return _error(409, "conflict", str(e))
            store.record_event(session, {"type": "submit", "payload": body})
        return {
            "items": [
                jsonio.encode_feedback_item(i)
                for i in session.last_items[: session.revealed + 1]
            ],
            "has_more_feedback": session.revealed + 1 < len(session.last_items),
            "transition": {"kind": transition.kind, "task": transition.task},
            "session": _session_view(session),
        }

    @app.post("/sessions/{session_id}/reveal")
    async def reveal(session_id: str, request: Request, response: Response):
        _track(request, response)
        session = store.get(session_id)
        if session is None:
            return _error(404, "unknown_session", f"no session {session_id!r}")
        with store.lock_for(session_id):
            item = reveal_next(session)
            if item is not None:
                store.record_event(session, {"type": "reveal"})
        return {
            "item": jsonio.encode_feedback_item(item) if item is not None else None,
            "has_more_feedback": session.revealed + 1 < len(session.last_items),
        }

    @app.get("/stats/usage")
    async def usage_stats(request: Request, response: Response):
        _track(request, response)
        return compute_usage(access_log.entries())

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/app", StaticFiles(directory=str(static_dir), html=True), name="app")

    return app


def _decode_answer(body: dict):
    """Submission body -> TaskValue, proof step, or None (acknowledgement)."""
    if body.get("step") is not None:
        return jsonio.decode_step(body["step"], "step")
    if body.get("answer") is not None:
        return jsonio.decode_task_value(body["answer"], "answer")
    if "answer" in body or "step" in body:
        return None
    raise SchemaError("the body needs an 'answer' or a 'step' field", "")
