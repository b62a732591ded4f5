"""Session-level coverage of the task kinds outside the shipped fixtures,
including snapshot round trips of every proof-state shape."""

import pytest

from logicbench.errors import KindMismatchError
from logicbench.exercises import (
    Binding,
    BisimConclude,
    BisimRemove,
    ExerciseSpec,
    ResolvePl,
    TaskSpec,
    TaskValue,
    decode_session,
    encode_session,
    start_session,
    submit,
)
from logicbench.exercises.steps import ResolveFo
from logicbench.formulas import Literal, Substitution, parse, parse_literal
from logicbench.semantics import ColoredGraph, KripkeStructure, TruthTable, build_truth_table


def single_task_exercise(task: TaskSpec) -> ExerciseSpec:
    return ExerciseSpec(f"only-{task.id}", task.id, (task,))


def roundtrip(session):
    again = decode_session(encode_session(session), session.exercise)
    assert encode_session(again) == encode_session(session)


class TestEvaluate:
    def exercise(self):
        k = KripkeStructure(
            frozenset({"w", "u"}), frozenset({("w", "u")}), {"u": {"A"}}, designated="w"
        )
        return single_task_exercise(
            TaskSpec(
                "eval",
                "evaluate",
                {"prompt": "Does the formula hold at w?", "world": "w"},
                {
                    "formula": Binding(value=TaskValue("formula", parse("<>A", "ML"))),
                    "interpretation": Binding(value=TaskValue("kripke", k)),
                },
                {"answer": "boolean"},
            )
        )

    def test_correct_judgment_advances(self):
        session = start_session(self.exercise())
        items, tr = submit(session, TaskValue("boolean", True))
        assert tr.kind == "finish"
        assert items[0].severity == "success"

    def test_wrong_judgment_stays(self):
        session = start_session(self.exercise())
        items, tr = submit(session, TaskValue("boolean", False))
        assert tr.kind == "stay"


class TestTruthTableTask:
    def exercise(self):
        return single_task_exercise(
            TaskSpec(
                "table",
                "truth_table",
                {"prompt": "Fill in the table", "atom_order": ["x", "y"]},
                {"formula": Binding(value=TaskValue("formula", parse("x -> y", "PL")))},
            )
        )

    def test_correct_table_advances(self):
        session = start_session(self.exercise())
        table = build_truth_table(parse("x -> y", "PL"), ["x", "y"])
        items, tr = submit(session, TaskValue("truth_table", table))
        assert tr.kind == "finish"

    def test_wrong_cell_reported(self):
        session = start_session(self.exercise())
        reference = build_truth_table(parse("x -> y", "PL"), ["x", "y"])
        rows = [list(r) for r in reference.rows]
        rows[2][-1] = True
        student = TruthTable(reference.atoms, reference.columns, tuple(tuple(r) for r in rows))
        items, tr = submit(session, TaskValue("truth_table", student))
        assert tr.kind == "stay"
        assert items[0].payload["wrong_cells"] == [(2, len(reference.columns) - 1)]

    def test_shape_mismatch_is_kind_error(self):
        session = start_session(self.exercise())
        bad = TruthTable(("x", "y"), (parse("x", "PL"),), ((True,),))
        with pytest.raises(KindMismatchError):
            submit(session, TaskValue("truth_table", bad))


class TestChooseVariables:
    def exercise(self):
        return single_task_exercise(
            TaskSpec(
                "vars",
                "choose_variables",
                {
                    "prompt": "Which propositional variables does the scenario need?",
                    "palette": ["s", "l", "m", "x"],
                    "correct": ["s", "l", "m"],
                },
                outputs={"variables": "node_set"},
            )
        )

    def test_set_equality_grading(self):
        session = start_session(self.exercise())
        items, tr = submit(session, TaskValue("node_set", frozenset({"s", "l"})))
        assert tr.kind == "stay"
        assert [i.generator for i in items] == ["correctness", "subset_relation", "node_diff"]
        items, tr = submit(session, TaskValue("node_set", frozenset({"s", "l", "m"})))
        assert tr.kind == "finish"

    def test_names_outside_palette_rejected(self):
        session = start_session(self.exercise())
        with pytest.raises(KindMismatchError):
            submit(session, TaskValue("node_set", frozenset({"zz"})))


class TestFoQuery:
    def exercise(self):
        graph = ColoredGraph(
            frozenset({"1", "2", "3"}),
            frozenset({("1", "2"), ("2", "3")}),
            {"3": {"Red"}},
        )
        return single_task_exercise(
            TaskSpec(
                "query",
                "fo_query",
                {
                    "prompt": "Select the nodes with an outgoing edge.",
                    "description": "nodes with at least one successor",
                    "target_query": parse("exists y E(x, y)", "FO"),
                    "strategy": "node_set",
                },
                {"graph": Binding(value=TaskValue("graph", graph))},
                {"formula": "fo_formula", "nodes": "node_set"},
            )
        )

    def test_equivalent_on_sample_graph_advances(self):
        session = start_session(self.exercise())
        # a different formula selecting the same nodes on this sample graph
        items, tr = submit(
            session, TaskValue("fo_formula", parse("~Red(x) & exists y E(x, y)", "FO"))
        )
        assert tr.kind == "finish"
        assert session.bound("query", "nodes").value == {"1", "2"}

    def test_subset_feedback_on_wrong_selection(self):
        session = start_session(self.exercise())
        items, tr = submit(session, TaskValue("fo_formula", parse("E(x, 2)", "FO")))
        assert tr.kind == "stay"
        assert [i.generator for i in items] == ["correctness", "subset_relation", "node_diff"]

    def test_wrong_free_variable_count_reported(self):
        session = start_session(self.exercise())
        items, tr = submit(session, TaskValue("fo_formula", parse("E(x, y)", "FO")))
        assert tr.kind == "stay"
        assert "free variable" in items[0].message


class TestConstructModelVariants:
    def test_valuation_model(self):
        spec = single_task_exercise(
            TaskSpec(
                "model",
                "construct_model",
                {"prompt": "Find a satisfying valuation."},
                {"formula": Binding(value=TaskValue("formula", parse("x & ~y", "PL")))},
                {"model": "valuation"},
            )
        )
        session = start_session(spec)
        items, tr = submit(session, TaskValue("valuation", {"x": True, "y": False}))
        assert tr.kind == "finish"

    def test_graph_model_for_fo_sentence(self):
        spec = single_task_exercise(
            TaskSpec(
                "model",
                "construct_model",
                {"prompt": "Build a graph with a red node."},
                {
                    "formula": Binding(
                        value=TaskValue("fo_formula", parse("exists x Red(x)", "FO"))
                    )
                },
                {"model": "graph"},
            )
        )
        session = start_session(spec)
        bad = ColoredGraph(frozenset({"1"}), frozenset())
        items, tr = submit(session, TaskValue("graph", bad))
        assert tr.kind == "stay"
        good = ColoredGraph(frozenset({"1"}), frozenset(), {"1": {"Red"}})
        items, tr = submit(session, TaskValue("graph", good))
        assert tr.kind == "finish"

    def test_kripke_model_requires_designated_world(self):
        spec = single_task_exercise(
            TaskSpec(
                "model",
                "construct_model",
                {"prompt": "Build a model."},
                {"formula": Binding(value=TaskValue("formula", parse("<>A", "ML")))},
                {"model": "kripke"},
            )
        )
        session = start_session(spec)
        undesignated = KripkeStructure(frozenset({"w"}), frozenset(), {})
        with pytest.raises(KindMismatchError):
            submit(session, TaskValue("kripke", undesignated))


class TestDistinguishWorlds:
    def exercise(self):
        k1 = KripkeStructure(frozenset({"w"}), frozenset(), {})
        k2 = KripkeStructure(frozenset({"u"}), frozenset({("u", "u")}), {})
        return single_task_exercise(
            TaskSpec(
                "disting",
                "distinguish_worlds",
                {"prompt": "Distinguish w from u.", "world1": "w", "world2": "u"},
                {
                    "k1": Binding(value=TaskValue("kripke", k1)),
                    "k2": Binding(value=TaskValue("kripke", k2)),
                },
                {"formula": "formula"},
            )
        )

    def test_distinguishing_formula_accepted(self):
        session = start_session(self.exercise())
        items, tr = submit(session, TaskValue("formula", parse("<>1", "ML")))
        assert tr.kind == "finish"

    def test_non_distinguishing_formula_rejected(self):
        session = start_session(self.exercise())
        items, tr = submit(session, TaskValue("formula", parse("1", "ML")))
        assert tr.kind == "stay"


class TestResolutionTasks:
    def test_pl_resolution_to_empty_clause(self):
        clauses = frozenset(
            {
                frozenset({Literal("p")}),
                frozenset({Literal("p", positive=False), Literal("q")}),
                frozenset({Literal("q", positive=False)}),
            }
        )
        spec = single_task_exercise(
            TaskSpec(
                "res",
                "resolution_pl",
                {"prompt": "Derive the empty clause."},
                {"clauses": Binding(value=TaskValue("clause_set", clauses))},
            )
        )
        session = start_session(spec)
        state = session.proof_states["res"]
        by_text = {tuple(sorted(l.name for l in c)): i for i, c in state.clauses.items()}
        p = by_text[("p",)]
        pq = by_text[("p", "q")]
        nq = by_text[("q",)]
        items, tr = submit(session, ResolvePl(p, pq, "p", frozenset({Literal("q")})))
        assert tr.kind == "stay" and items[0].severity == "success"
        roundtrip(session)
        new_id = max(session.proof_states["res"].clauses)
        items, tr = submit(session, ResolvePl(new_id, nq, "q", frozenset()))
        assert tr.kind == "finish"
        assert any("empty clause" in i.message.lower() for i in items)

    def test_rejected_step_offers_hint_with_correct_resolvent(self):
        clauses = frozenset(
            {
                frozenset({Literal("p"), Literal("q")}),
                frozenset({Literal("p", positive=False)}),
            }
        )
        spec = single_task_exercise(
            TaskSpec(
                "res",
                "resolution_pl",
                {"prompt": "Resolve."},
                {"clauses": Binding(value=TaskValue("clause_set", clauses))},
            )
        )
        session = start_session(spec)
        state = session.proof_states["res"]
        big = next(i for i, c in state.clauses.items() if len(c) == 2)
        unit = next(i for i, c in state.clauses.items() if len(c) == 1)
        items, tr = submit(session, ResolvePl(big, unit, "p", frozenset()))
        assert tr.kind == "stay"
        assert items[0].severity == "error"
        assert "{q}" in items[1].message  # the hint names the correct resolvent

    def test_fo_resolution_with_substitutions(self):
        clauses = frozenset(
            {
                frozenset({parse_literal("P(x)")}),
                frozenset({parse_literal("~P(a)")}),
            }
        )
        spec = single_task_exercise(
            TaskSpec(
                "res",
                "resolution_fo",
                {"prompt": "Refute."},
                {"clauses": Binding(value=TaskValue("clause_set", clauses))},
            )
        )
        session = start_session(spec)
        state = session.proof_states["res"]
        pos = next(i for i, c in state.clauses.items() if next(iter(c)).positive)
        neg = next(i for i, c in state.clauses.items() if not next(iter(c)).positive)
        step = ResolveFo(
            pos,
            Substitution({"x": parse_literal("P(a)").args[0]}),
            neg,
            Substitution(),
            parse_literal("P(x)"),
            parse_literal("~P(a)"),
            frozenset(),
        )
        items, tr = submit(session, step)
        assert tr.kind == "finish"
        roundtrip(session)


class TestBisimulationTask:
    def exercise(self):
        k1 = KripkeStructure(frozenset({"w"}), frozenset(), {})
        k2 = KripkeStructure(frozenset({"u"}), frozenset({("u", "u")}), {})
        return single_task_exercise(
            TaskSpec(
                "bisim",
                "bisimulation",
                {"prompt": "Compute the maximal bisimulation."},
                {
                    "k1": Binding(value=TaskValue("kripke", k1)),
                    "k2": Binding(value=TaskValue("kripke", k2)),
                },
            )
        )

    def test_remove_then_conclude(self):
        session = start_session(self.exercise())
        items, tr = submit(session, BisimConclude(frozenset()))
        assert tr.kind == "stay"  # a removable pair remains
        items, tr = submit(session, BisimRemove(("w", "u"), "back-fail", "u"))
        assert tr.kind == "stay" and items[0].severity == "success"
        roundtrip(session)
        items, tr = submit(session, BisimConclude(frozenset()))
        assert tr.kind == "finish"
