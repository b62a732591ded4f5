"""Compositional task model: typed tasks, guarded workflows, sessions."""

from .codec import (
    decode_session,
    encode_session,
    load_exercise,
    serialize_exercise,
)
from .model import (
    TASK_KINDS,
    VALUE_KINDS,
    Binding,
    ExerciseSpec,
    Guard,
    TaskSpec,
    TaskValue,
    Transition,
)
from .session import (
    SessionState,
    TransitionResult,
    resolve_inputs,
    reveal_next,
    start_session,
    submit,
)
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
from .validate import ValidationIssue, validate_exercise

__all__ = [
    "decode_session", "encode_session", "load_exercise", "serialize_exercise",
    "TASK_KINDS", "VALUE_KINDS", "Binding", "ExerciseSpec", "Guard", "TaskSpec",
    "TaskValue", "Transition",
    "SessionState", "TransitionResult", "resolve_inputs", "reveal_next",
    "start_session", "submit",
    "BisimConclude", "BisimRemove", "HornConclude", "HornMark", "ResolveFo",
    "ResolvePl", "TableauApply", "TableauClose",
    "ValidationIssue", "validate_exercise",
]
