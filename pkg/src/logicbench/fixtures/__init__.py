"""Workflow fixtures shipped with the package."""

from __future__ import annotations

import json
from importlib import resources

from ..exercises.codec import load_exercise
from ..exercises.model import ExerciseSpec

EXERCISE_FILES = ("fig1_reasoning.json", "fig2_modal_sat.json")


def fixture_text(name: str) -> str:
    return resources.files(__package__).joinpath(name).read_text(encoding="utf-8")


def load_fixture_exercise(name: str) -> ExerciseSpec:
    return load_exercise(json.loads(fixture_text(name)))


def builtin_exercises() -> dict[str, ExerciseSpec]:
    specs = {}
    for filename in EXERCISE_FILES:
        spec = load_fixture_exercise(filename)
        specs[spec.id] = spec
    return specs
