"""Typed task specs wired into guarded workflows.

A task consumes inputs (literal values or output references to earlier
tasks), and on completion publishes values on its declared output ports.
Transitions carry guards over published outputs; the last transition of a
task must be unguarded so some branch always applies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

VALUE_KINDS = (
    "formula",
    "formula_list",
    "fo_formula",
    "clause_set",
    "valuation",
    "kripke",
    "graph",
    "node_set",
    "boolean",
    "choice",
    "truth_table",
    "proof_state",
)


@dataclass(frozen=True)
class TaskValue:
    kind: str
    value: Any

    def __post_init__(self):
        if self.kind not in VALUE_KINDS:
            raise ValueError(f"unknown value kind {self.kind!r}")


@dataclass(frozen=True)
class Binding:
    """Input source: a literal value or a reference to ``task.port``."""

    ref: tuple[str, str] | None = None
    value: TaskValue | None = None

    def __post_init__(self):
        if (self.ref is None) == (self.value is None):
            raise ValueError("a binding is either a reference or a literal value")


@dataclass(frozen=True)
class Guard:
    kind: str  # "always" | "equals"
    task: str | None = None
    port: str | None = None
    value: Any = None


@dataclass(frozen=True)
class Transition:
    target: str | None  # None finishes the exercise
    guard: Guard | None = None  # None = default branch


@dataclass(frozen=True)
class TaskSpec:
    id: str
    kind: str
    config: Mapping[str, Any] = field(default_factory=dict)
    inputs: Mapping[str, Binding] = field(default_factory=dict)
    outputs: Mapping[str, str] = field(default_factory=dict)  # port -> kind


@dataclass(frozen=True)
class ExerciseSpec:
    id: str
    title: str
    tasks: tuple[TaskSpec, ...]
    transitions: Mapping[str, tuple[Transition, ...]] = field(default_factory=dict)
    description: str = ""

    def task(self, task_id: str) -> TaskSpec:
        for t in self.tasks:
            if t.id == task_id:
                return t
        raise KeyError(task_id)

    def transitions_for(self, task_id: str) -> tuple[Transition, ...]:
        """Configured transitions, falling back to list order."""
        configured = self.transitions.get(task_id)
        if configured:
            return configured
        ids = [t.id for t in self.tasks]
        index = ids.index(task_id)
        target = ids[index + 1] if index + 1 < len(ids) else None
        return (Transition(target),)


@dataclass(frozen=True)
class TaskKindSpec:
    """Binding signature of one task kind."""

    inputs: Mapping[str, tuple[str, ...]] = field(default_factory=dict)
    required_inputs: tuple[str, ...] = ()
    outputs: Mapping[str, tuple[str, ...]] = field(default_factory=dict)
    required_config: tuple[str, ...] = ()
    step_task: bool = False


TASK_KINDS: Mapping[str, TaskKindSpec] = {
    "construct_formula": TaskKindSpec(
        outputs={"formula": ("formula",)},
        required_config=("targets",),
    ),
    "construct_model": TaskKindSpec(
        inputs={"formula": ("formula", "fo_formula")},
        required_inputs=("formula",),
        outputs={"model": ("valuation", "kripke", "graph")},
    ),
    "evaluate": TaskKindSpec(
        inputs={"formula": ("formula",), "interpretation": ("valuation", "kripke")},
        required_inputs=("formula", "interpretation"),
        outputs={"answer": ("boolean",)},
    ),
    "transform": TaskKindSpec(
        inputs={
            "formula": ("formula",),
            "premises": ("formula",),
            "consequence": ("formula",),
        },
        outputs={"formula": ("formula",)},
    ),
    "truth_table": TaskKindSpec(
        inputs={"formula": ("formula",)},
        required_inputs=("formula",),
    ),
    "hornsat": TaskKindSpec(
        inputs={"formula": ("formula",)},
        required_inputs=("formula",),
        step_task=True,
    ),
    "tableau": TaskKindSpec(
        inputs={"formula": ("formula",)},
        required_inputs=("formula",),
        step_task=True,
    ),
    "resolution_pl": TaskKindSpec(
        inputs={"clauses": ("clause_set",)},
        required_inputs=("clauses",),
        step_task=True,
    ),
    "resolution_fo": TaskKindSpec(
        inputs={"clauses": ("clause_set",)},
        required_inputs=("clauses",),
        step_task=True,
    ),
    "bisimulation": TaskKindSpec(
        inputs={"k1": ("kripke",), "k2": ("kripke",)},
        required_inputs=("k1", "k2"),
        step_task=True,
    ),
    "distinguish_worlds": TaskKindSpec(
        inputs={"k1": ("kripke",), "k2": ("kripke",)},
        required_inputs=("k1", "k2"),
        required_config=("world1", "world2"),
        outputs={"formula": ("formula",)},
    ),
    "multiple_choice": TaskKindSpec(
        required_config=("options",),
        outputs={"choice": ("choice",)},
    ),
    "messaging": TaskKindSpec(required_config=("text",)),
    "choose_variables": TaskKindSpec(
        required_config=("palette", "correct"),
        outputs={"variables": ("node_set",)},
    ),
    "fo_query": TaskKindSpec(
        inputs={"graph": ("graph",)},
        required_inputs=("graph",),
        outputs={"formula": ("fo_formula",), "nodes": ("node_set",)},
    ),
}
