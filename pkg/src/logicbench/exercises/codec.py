"""Exercise file format and session snapshots.

An exercise document lists its tasks in workflow order.  Input bindings are
either ``"$ref:taskId.port"`` strings or inline tagged values; transitions
sit on each task as a ``next`` array of ``{"when": <guard>, "goto": <id>}``
entries (``goto: null`` finishes the exercise, a missing ``when`` is the
default branch).
"""

from __future__ import annotations

from typing import Any, Mapping

from .. import jsonio
from ..errors import SchemaError
from ..formulas.printer import render
from .model import (
    TASK_KINDS,
    Binding,
    ExerciseSpec,
    Guard,
    TaskSpec,
    TaskValue,
    Transition,
)
from .session import SessionState

# config fields holding formulas, per task kind; parsed at load time
_FORMULA_LIST_FIELDS = {"construct_formula": ("targets",)}
_FORMULA_FIELDS = {"transform": ("target",)}
_FO_FORMULA_FIELDS = {"fo_query": ("target_query",)}


def _logic_of_config(config: Mapping[str, Any]) -> str:
    return config.get("logic", "PL")


def _decode_config(kind: str, raw, path: str) -> dict:
    if raw is None:
        return {}
    jsonio._expect(raw, dict, path, "a config object")
    config = dict(raw)
    logic = _logic_of_config(config)
    for field in _FORMULA_LIST_FIELDS.get(kind, ()):
        if field in config:
            texts = jsonio._expect(config[field], list, f"{path}.{field}", "a list")
            config[field] = [
                jsonio._parse(str(t), "ML" if logic == "ML" else "PL", f"{path}.{field}[{i}]")
                for i, t in enumerate(texts)
            ]
    for field in _FORMULA_FIELDS.get(kind, ()):
        if field in config and config[field] is not None:
            config[field] = jsonio._parse(
                str(config[field]), "ML" if logic == "ML" else "PL", f"{path}.{field}"
            )
    for field in _FO_FORMULA_FIELDS.get(kind, ()):
        if field in config and config[field] is not None:
            config[field] = jsonio._parse(str(config[field]), "FO", f"{path}.{field}")
    return config


def _encode_config(kind: str, config: Mapping[str, Any]) -> dict:
    out = dict(config)
    for field in _FORMULA_LIST_FIELDS.get(kind, ()):
        if field in out:
            out[field] = [render(f) for f in out[field]]
    for field in _FORMULA_FIELDS.get(kind, ()) + _FO_FORMULA_FIELDS.get(kind, ()):
        if field in out and out[field] is not None:
            out[field] = render(out[field])
    return out


def _decode_binding(raw, path: str) -> Binding:
    if isinstance(raw, str):
        if not raw.startswith("$ref:") or "." not in raw[5:]:
            raise SchemaError(f"bad reference {raw!r}; expected $ref:taskId.port", path)
        task, port = raw[5:].split(".", 1)
        return Binding(ref=(task, port))
    return Binding(value=jsonio.decode_task_value(raw, path))


def _encode_binding(binding: Binding):
    if binding.ref is not None:
        return f"$ref:{binding.ref[0]}.{binding.ref[1]}"
    return jsonio.encode_task_value(binding.value)


def _decode_guard(raw, path: str) -> Guard:
    jsonio._expect(raw, dict, path, "a guard object")
    kind = jsonio._field(raw, "kind", path)
    if kind == "always":
        return Guard("always")
    if kind == "equals":
        return Guard(
            "equals",
            str(jsonio._field(raw, "task", path)),
            str(jsonio._field(raw, "port", path)),
            jsonio._field(raw, "value", path),
        )
    raise SchemaError(f"unknown guard kind {kind!r}", f"{path}.kind")


def _encode_guard(guard: Guard) -> dict:
    if guard.kind == "always":
        return {"kind": "always"}
    return {"kind": "equals", "task": guard.task, "port": guard.port, "value": guard.value}


def load_exercise(doc) -> ExerciseSpec:
    """Exercise spec from a JSON document; SchemaError paths locate problems."""
    jsonio._expect(doc, dict, "exercise", "an exercise object")
    exercise_id = str(jsonio._field(doc, "id", "exercise"))
    title = str(jsonio._field(doc, "title", "exercise"))
    raw_tasks = jsonio._expect(
        jsonio._field(doc, "tasks", "exercise"), list, "exercise.tasks", "a list"
    )
    tasks = []
    transitions: dict[str, tuple[Transition, ...]] = {}
    for i, raw in enumerate(raw_tasks):
        path = f"exercise.tasks[{i}]"
        jsonio._expect(raw, dict, path, "a task object")
        task_id = str(jsonio._field(raw, "id", path))
        kind = str(jsonio._field(raw, "kind", path))
        if kind not in TASK_KINDS:
            raise SchemaError(f"unknown task kind {kind!r}", f"{path}.kind")
        inputs = {
            str(port): _decode_binding(b, f"{path}.inputs.{port}")
            for port, b in (raw.get("inputs") or {}).items()
        }
        outputs = {str(p): str(k) for p, k in (raw.get("outputs") or {}).items()}
        tasks.append(
            TaskSpec(
                task_id,
                kind,
                _decode_config(kind, raw.get("config"), f"{path}.config"),
                inputs,
                outputs,
            )
        )
        if "next" in raw and raw["next"] is not None:
            entries = jsonio._expect(raw["next"], list, f"{path}.next", "a list")
            decoded = []
            for j, entry in enumerate(entries):
                epath = f"{path}.next[{j}]"
                jsonio._expect(entry, dict, epath, "a transition object")
                goto = entry.get("goto")
                guard = (
                    _decode_guard(entry["when"], f"{epath}.when")
                    if entry.get("when") is not None
                    else None
                )
                decoded.append(Transition(str(goto) if goto is not None else None, guard))
            transitions[task_id] = tuple(decoded)
    return ExerciseSpec(
        exercise_id, title, tuple(tasks), transitions, str(doc.get("description", ""))
    )


def serialize_exercise(spec: ExerciseSpec) -> dict:
    tasks = []
    for task in spec.tasks:
        raw: dict[str, Any] = {"id": task.id, "kind": task.kind}
        if task.config:
            raw["config"] = _encode_config(task.kind, task.config)
        if task.inputs:
            raw["inputs"] = {p: _encode_binding(b) for p, b in task.inputs.items()}
        if task.outputs:
            raw["outputs"] = dict(task.outputs)
        if task.id in spec.transitions:
            raw["next"] = [
                {
                    **({"when": _encode_guard(tr.guard)} if tr.guard is not None else {}),
                    "goto": tr.target,
                }
                for tr in spec.transitions[task.id]
            ]
        tasks.append(raw)
    return {
        "id": spec.id,
        "title": spec.title,
        "description": spec.description,
        "tasks": tasks,
    }


# ---- session snapshots -------------------------------------------------------


def encode_session(session: SessionState) -> dict:
    return {
        "session_id": session.session_id,
        "exercise_id": session.exercise.id,
        "status": session.status,
        "current_task": session.current_task,
        "env": [
            {"task": task, "port": port, "value": jsonio.encode_task_value(value)}
            for (task, port), value in sorted(session.env.items())
        ],
        "proof_states": {
            task: jsonio.encode_proof_state(state)
            for task, state in sorted(session.proof_states.items())
        },
        "last_task": session.last_task,
        "revealed": session.revealed,
        "last_items": [jsonio.encode_feedback_item(i) for i in session.last_items],
    }


def decode_session(doc, exercise: ExerciseSpec, path: str = "session") -> SessionState:
    jsonio._expect(doc, dict, path, "a session object")
    env = {}
    for i, entry in enumerate(doc.get("env", [])):
        epath = f"{path}.env[{i}]"
        env[(str(entry["task"]), str(entry["port"]))] = jsonio.decode_task_value(
            entry["value"], f"{epath}.value"
        )
    proof_states = {
        task: jsonio.decode_proof_state(raw, f"{path}.proof_states.{task}")
        for task, raw in doc.get("proof_states", {}).items()
    }
    return SessionState(
        exercise=exercise,
        session_id=str(jsonio._field(doc, "session_id", path)),
        current_task=doc.get("current_task"),
        status=str(doc.get("status", "active")),
        env=env,
        proof_states=proof_states,
        last_task=doc.get("last_task"),
        last_items=[
            jsonio.decode_feedback_item(raw, f"{path}.last_items[{i}]")
            for i, raw in enumerate(doc.get("last_items", []))
        ],
        revealed=int(doc.get("revealed", -1)),
    )
