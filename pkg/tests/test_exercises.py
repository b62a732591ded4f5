"""Exercise validation, session state machine, serialization."""

import json

import pytest

from logicbench.errors import KindMismatchError, StateError
from logicbench.exercises import (
    Binding,
    ExerciseSpec,
    Guard,
    HornConclude,
    HornMark,
    TaskSpec,
    TaskValue,
    Transition,
    load_exercise,
    reveal_next,
    serialize_exercise,
    start_session,
    submit,
    validate_exercise,
)
from logicbench.fixtures import builtin_exercises, fixture_text, load_fixture_exercise
from logicbench.formulas import parse
from logicbench.semantics import KripkeStructure


def formula_value(text: str, logic: str = "PL") -> TaskValue:
    return TaskValue("formula", parse(text, logic))


@pytest.fixture
def fig1():
    return load_fixture_exercise("fig1_reasoning.json")


@pytest.fixture
def fig2():
    return load_fixture_exercise("fig2_modal_sat.json")


class TestValidate:
    def test_fixtures_validate(self, fig1, fig2):
        assert validate_exercise(fig1) == []
        assert validate_exercise(fig2) == []

    def test_forward_reference(self):
        spec = ExerciseSpec(
            "bad",
            "bad",
            (
                TaskSpec(
                    "first",
                    "transform",
                    {"required_form": "CNF"},
                    {"formula": Binding(ref=("second", "formula"))},
                    {"formula": "formula"},
                ),
                TaskSpec(
                    "second",
                    "construct_formula",
                    {"targets": [parse("x", "PL")]},
                    outputs={"formula": "formula"},
                ),
            ),
        )
        issues = validate_exercise(spec)
        assert any("forward reference" in str(i) for i in issues)

    def test_output_kind_mismatch(self):
        spec = ExerciseSpec(
            "bad",
            "bad",
            (
                TaskSpec(
                    "t",
                    "transform",
                    {"required_form": "CNF"},
                    {"formula": Binding(value=formula_value("x"))},
                    {"formula": "kripke"},
                ),
            ),
        )
        issues = validate_exercise(spec)
        assert any("signature allows" in str(i) for i in issues)

    def test_guard_totality(self):
        spec = ExerciseSpec(
            "bad",
            "bad",
            (
                TaskSpec(
                    "choice",
                    "multiple_choice",
                    {"options": ["a", "b"]},
                    outputs={"choice": "choice"},
                ),
                TaskSpec("end", "messaging", {"text": "done"}),
            ),
            {
                "choice": (
                    Transition("end", guard=Guard("equals", "choice", "choice", 0)),
                )
            },
        )
        issues = validate_exercise(spec)
        assert any("unguarded" in str(i) for i in issues)

    def test_unreachable_task(self):
        spec = ExerciseSpec(
            "bad",
            "bad",
            (
                TaskSpec("a", "messaging", {"text": "hi"}),
                TaskSpec("b", "messaging", {"text": "skipped"}),
            ),
            {"a": (Transition(None),)},
        )
        issues = validate_exercise(spec)
        assert any("unreachable" in str(i) for i in issues)

    def test_unknown_kind_in_document(self):
        doc = {
            "id": "x",
            "title": "x",
            "tasks": [{"id": "t", "kind": "quiz"}],
        }
        from logicbench.errors import SchemaError

        with pytest.raises(SchemaError) as err:
            load_exercise(doc)
        assert "tasks[0]" in err.value.path


class TestSessionFlow:
    def test_fig2_starts_at_transform_with_bound_formula(self, fig2):
        session = start_session(fig2)
        assert session.current_task == "nnf"
        task = fig2.task("nnf")
        assert task.inputs["formula"].value.value == parse(
            "~[](~A | ~<>B) & (<>B | ~<>A)", "ML"
        )

    def test_two_sessions_independent(self, fig1):
        s1 = start_session(fig1)
        s2 = start_session(fig1)
        submit(s1, None)
        assert s1.current_task == "scenario"
        assert s2.current_task == "assignment"

    def test_invalid_spec_rejected(self):
        spec = ExerciseSpec("empty", "empty", ())
        with pytest.raises(ValueError):
            start_session(spec)

    def test_transform_advances_and_binds(self, fig2):
        session = start_session(fig2)
        items, tr = submit(session, formula_value("<>(A & <>B) & (<>B | []~A)", "ML"))
        assert tr.kind == "advance" and tr.task == "tableau"
        assert session.bound("nnf", "formula").value == parse(
            "<>(A & <>B) & (<>B | []~A)", "ML"
        )

    def test_transform_rejects_inequivalent_nnf(self, fig2):
        session = start_session(fig2)
        items, tr = submit(session, formula_value("<>(A & <>B)", "ML"))
        assert tr.kind == "stay"
        assert session.current_task == "nnf"
        assert items[0].severity == "error"

    def test_transform_rejects_non_nnf(self, fig2):
        session = start_session(fig2)
        items, tr = submit(session, formula_value("~[](~A | ~<>B) & (<>B | ~<>A)", "ML"))
        assert tr.kind == "stay"

    def test_kind_mismatch_raises(self, fig2):
        session = start_session(fig2)
        with pytest.raises(KindMismatchError):
            submit(session, TaskValue("kripke", KripkeStructure(frozenset({"w"}), frozenset())))

    def test_rejected_submission_mutates_nothing(self, fig1):
        session = start_session(fig1)
        submit(session, None)
        env_before = dict(session.env)
        task_before = session.current_task
        items, tr = submit(
            session,
            TaskValue(
                "formula_list",
                (parse("s", "PL"), parse("l", "PL"), parse("m", "PL")),
            ),
        )
        assert tr.kind == "stay"
        assert session.env == env_before
        assert session.current_task == task_before

    def test_finished_session_rejects_submissions(self, fig1):
        session = start_session(fig1)
        _drive_fig1(session)
        assert session.status == "finished"
        with pytest.raises(StateError):
            submit(session, TaskValue("choice", 0))

    def test_determinism(self, fig1):
        s1, s2 = start_session(fig1, "a"), start_session(fig1, "a")
        _drive_fig1(s1)
        _drive_fig1(s2)
        from logicbench.exercises import encode_session

        assert encode_session(s1) == encode_session(s2)

    def test_type_soundness_of_bound_values(self, fig1):
        session = start_session(fig1)
        _drive_fig1(session)
        for (task_id, port), value in session.env.items():
            declared = fig1.task(task_id).outputs[port]
            assert value.kind == declared


def _drive_fig1(session):
    submit(session, None)
    submit(
        session,
        TaskValue(
            "formula_list",
            (parse("s", "PL"), parse("s -> l", "PL"), parse("s & l -> m", "PL")),
        ),
    )
    submit(session, formula_value("m"))
    submit(session, TaskValue("choice", 0))
    submit(session, formula_value("(1 -> s) & (s -> l) & (s & l -> m) & (m -> 0)"))
    submit(session, HornMark("s", 0))
    submit(session, HornMark("l", 1))
    submit(session, HornMark("m", 2))
    submit(session, HornConclude("unsatisfiable"))
    submit(session, TaskValue("choice", 1))


class TestRevealMechanics:
    def test_rank_zero_auto_shown_then_walk(self, fig1):
        session = start_session(fig1)
        submit(session, None)
        items, tr = submit(
            session,
            TaskValue(
                "formula_list",
                (parse("s", "PL"), parse("l -> s", "PL"), parse("s & l -> m", "PL")),
            ),
        )
        assert tr.kind == "stay"
        assert session.revealed == 0  # rank 0 visible immediately
        first = reveal_next(session)
        assert first is not None and first.reveal_rank == 1
        ranks = [first.reveal_rank]
        while True:
            item = reveal_next(session)
            if item is None:
                break
            ranks.append(item.reveal_rank)
        assert ranks == list(range(1, len(items)))

    def test_reveal_after_correct_single_item(self, fig1):
        session = start_session(fig1)
        submit(session, None)
        submit(
            session,
            TaskValue(
                "formula_list",
                (parse("s", "PL"), parse("s -> l", "PL"), parse("s & l -> m", "PL")),
            ),
        )
        assert reveal_next(session) is None


class TestWrongHornStep:
    def test_wrong_marking_rejected_session_stays(self, fig1):
        session = start_session(fig1)
        submit(session, None)
        submit(
            session,
            TaskValue(
                "formula_list",
                (parse("s", "PL"), parse("s -> l", "PL"), parse("s & l -> m", "PL")),
            ),
        )
        submit(session, formula_value("m"))
        submit(session, TaskValue("choice", 0))
        submit(session, formula_value("(1 -> s) & (s -> l) & (s & l -> m) & (m -> 0)"))
        items, tr = submit(session, HornMark("m", 2))  # s, l not marked yet
        assert tr.kind == "stay"
        assert items[0].severity == "error"
        assert items[0].payload["reason"] == "premise_unmarked"
        assert session.current_task == "hornsat"


class TestCodec:
    def test_round_trip(self, fig1, fig2):
        for spec in (fig1, fig2):
            assert load_exercise(serialize_exercise(spec)) == spec

    def test_missing_kind_path(self):
        from logicbench.errors import SchemaError

        doc = json.loads(fixture_text("fig1_reasoning.json"))
        del doc["tasks"][1]["kind"]
        with pytest.raises(SchemaError) as err:
            load_exercise(doc)
        assert "tasks[1]" in err.value.path

    def test_builtin_exercises_listing(self):
        specs = builtin_exercises()
        assert set(specs) == {"chat-debugging", "modal-satisfiability"}
