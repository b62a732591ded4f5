"""Static validation of exercise specs: reference wiring, kinds, guards."""

from __future__ import annotations

from dataclasses import dataclass

from .model import TASK_KINDS, ExerciseSpec, TaskSpec


@dataclass(frozen=True)
class ValidationIssue:
    task_id: str
    message: str

    def __str__(self):
        return f"{self.task_id}: {self.message}"


def validate_exercise(spec: ExerciseSpec) -> list[ValidationIssue]:
    """All wiring problems of ``spec``; an empty list means the spec is ok."""
    issues: list[ValidationIssue] = []
    if not spec.tasks:
        return [ValidationIssue("<exercise>", "an exercise needs at least one task")]
    order = {t.id: i for i, t in enumerate(spec.tasks)}
    if len(order) != len(spec.tasks):
        issues.append(ValidationIssue("<exercise>", "duplicate task ids"))
        return issues

    for task in spec.tasks:
        issues.extend(_check_task(spec, task, order))
    issues.extend(_check_transitions(spec, order))
    if not issues:
        issues.extend(_check_reachability(spec))
    return issues


def _check_task(spec: ExerciseSpec, task: TaskSpec, order) -> list[ValidationIssue]:
    issues: list[ValidationIssue] = []
    kind_spec = TASK_KINDS.get(task.kind)
    if kind_spec is None:
        return [ValidationIssue(task.id, f"unknown task kind {task.kind!r}")]
    for key in kind_spec.required_config:
        if key not in task.config:
            issues.append(ValidationIssue(task.id, f"missing config field {key!r}"))

    for port, binding in task.inputs.items():
        allowed = kind_spec.inputs.get(port)
        if allowed is None:
            issues.append(ValidationIssue(task.id, f"task kind {task.kind} has no input {port!r}"))
            continue
        if binding.ref is not None:
            src_task, src_port = binding.ref
            if src_task not in order:
                issues.append(
                    ValidationIssue(task.id, f"binding {port} references unknown task {src_task!r}")
                )
                continue
            if order[src_task] >= order[task.id]:
                issues.append(
                    ValidationIssue(
                        task.id,
                        f"binding {port} references {src_task}.{src_port}, which does not"
                        " precede this task (forward reference)",
                    )
                )
                continue
            src_kind = spec.task(src_task).outputs.get(src_port)
            if src_kind is None:
                issues.append(
                    ValidationIssue(
                        task.id, f"binding {port} references undeclared port {src_task}.{src_port}"
                    )
                )
            elif src_kind not in allowed:
                issues.append(
                    ValidationIssue(
                        task.id,
                        f"binding {port} has kind {src_kind}, expected one of {allowed}",
                    )
                )
        else:
            if binding.value.kind not in allowed:
                issues.append(
                    ValidationIssue(
                        task.id,
                        f"binding {port} has kind {binding.value.kind}, expected one of {allowed}",
                    )
                )

    missing = [
        port
        for port in kind_spec.required_inputs
        if port not in task.inputs
    ]
    if task.kind == "transform":
        # either a direct formula or the premises/consequence pair
        if "formula" not in task.inputs and not (
            "premises" in task.inputs and "consequence" in task.inputs
        ):
            issues.append(
                ValidationIssue(
                    task.id, "transform needs a formula input or premises and consequence"
                )
            )
    elif missing:
        issues.append(ValidationIssue(task.id, f"missing inputs: {', '.join(missing)}"))

    for port, kind in task.outputs.items():
        allowed = kind_spec.outputs.get(port)
        if allowed is None:
            issues.append(
                ValidationIssue(task.id, f"task kind {task.kind} has no output port {port!r}")
            )
        elif kind not in allowed:
            issues.append(
                ValidationIssue(
                    task.id,
                    f"output {port} declared as {kind}, signature allows {allowed}",
                )
            )
    return issues


def _check_transitions(spec: ExerciseSpec, order) -> list[ValidationIssue]:
    issues: list[ValidationIssue] = []
    for task in spec.tasks:
        transitions = spec.transitions_for(task.id)
        if not transitions:
            issues.append(ValidationIssue(task.id, "no transitions"))
            continue
        for i, tr in enumerate(transitions):
            if tr.target is not None:
                if tr.target not in order:
                    issues.append(
                        ValidationIssue(task.id, f"transition to unknown task {tr.target!r}")
                    )
                elif order[tr.target] <= order[task.id]:
                    issues.append(
                        ValidationIssue(
                            task.id,
                            f"transition to {tr.target} goes backwards; workflows are"
                            " forward-edged DAGs",
                        )
                    )
            guard = tr.guard
            if guard is None:
                continue
            if guard.kind == "always":
                continue
            if guard.kind != "equals":
                issues.append(ValidationIssue(task.id, f"unknown guard kind {guard.kind!r}"))
                continue
            if guard.task not in order:
                issues.append(
                    ValidationIssue(task.id, f"guard references unknown task {guard.task!r}")
                )
            elif order[guard.task] > order[task.id]:
                issues.append(
                    ValidationIssue(
                        task.id, f"guard references {guard.task}, which runs later"
                    )
                )
            elif guard.port not in spec.task(guard.task).outputs:
                issues.append(
                    ValidationIssue(
                        task.id,
                        f"guard references undeclared port {guard.task}.{guard.port}",
                    )
                )
        if transitions[-1].guard is not None:
            issues.append(
                ValidationIssue(
                    task.id,
                    "the last transition must be unguarded so some branch always applies",
                )
            )
    return issues


def _check_reachability(spec: ExerciseSpec) -> list[ValidationIssue]:
    reachable = {spec.tasks[0].id}
    frontier = [spec.tasks[0].id]
    while frontier:
        current = frontier.pop()
        for tr in spec.transitions_for(current):
            if tr.target is not None and tr.target not in reachable:
                reachable.add(tr.target)
                frontier.append(tr.target)
    return [
        ValidationIssue(t.id, "unreachable from the first task")
        for t in spec.tasks
        if t.id not in reachable
    ]
