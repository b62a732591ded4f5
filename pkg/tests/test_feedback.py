"""Feedback generators, misconception detection, strategy programs."""

from random import Random

import pytest

from logicbench.errors import FeedbackError, ParseError
from logicbench.feedback import (
    BUILTIN_STRATEGIES,
    FeedbackContext,
    detect_misconceptions,
    generate_distinguishing_model,
    node_set_feedback,
    parse_strategy,
    render_strategy,
    run_strategy,
)
from logicbench.formulas import parse
from logicbench.reasoning import ml_equivalent, pl_equivalent
from logicbench.semantics import ColoredGraph, check_model, eval_pl

PL_STRATEGY = BUILTIN_STRATEGIES["formula_construction"]
FO_STRATEGY = BUILTIN_STRATEGIES["node_set"]


def construction_ctx(student: str, target: str, logic: str = "PL") -> FeedbackContext:
    return FeedbackContext(
        "construct_formula",
        answer=parse(student, logic),
        target=parse(target, logic),
        logic=logic,
    )


class TestRunStrategy:
    def test_correct_answer_single_success(self):
        items = run_strategy(PL_STRATEGY, construction_ctx("m -> s", "m -> s"))
        assert [i.generator for i in items] == ["correctness"]
        assert items[0].severity == "success"

    def test_incorrect_answer_full_cascade(self):
        items = run_strategy(PL_STRATEGY, construction_ctx("s -> m", "m -> s"))
        assert [i.generator for i in items] == [
            "correctness",
            "misconception_hint",
            "misconception_explicit",
            "misconception_position",
            "distinguishing_model",
        ]
        assert [i.reveal_rank for i in items] == [0, 1, 2, 3, 4]

    def test_always_rule_fires_when_detection_empty(self):
        strategy = parse_strategy(
            """
            rule r1: when always run correctness
            rule r2: when incorrect run misconception_hint
            rule r3: when empty(misconception_hint) run distinguishing_model
            """
        )
        # no rewrite of "a" mentions b or c, so detection stays empty and the
        # distinguishing-model rule fires through its own condition
        ctx = construction_ctx("a", "b & c")
        items = run_strategy(strategy, ctx)
        generators = [i.generator for i in items]
        assert "misconception_hint" not in generators
        assert "distinguishing_model" in generators

    def test_stop_halts_evaluation(self):
        strategy = parse_strategy(
            """
            rule r1: when always run correctness stop
            rule r2: when always run distinguishing_model
            """
        )
        items = run_strategy(strategy, construction_ctx("x", "~x"))
        assert [i.generator for i in items] == ["correctness"]

    def test_determinism(self):
        for _ in range(3):
            a = run_strategy(PL_STRATEGY, construction_ctx("s -> m", "m -> s"))
            b = run_strategy(PL_STRATEGY, construction_ctx("s -> m", "m -> s"))
            assert a == b

    def test_generator_task_mismatch(self):
        ctx = FeedbackContext("multiple_choice", answer=0, target=0)
        strategy = parse_strategy("rule r1: when always run subset_relation\n")
        with pytest.raises(FeedbackError):
            run_strategy(strategy, ctx)

    def test_ranks_gapless(self):
        items = run_strategy(PL_STRATEGY, construction_ctx("x | y", "x & y"))
        assert [i.reveal_rank for i in items] == list(range(len(items)))


class TestMisconceptions:
    def test_implication_swap(self):
        matches = detect_misconceptions(parse("s -> m", "PL"), parse("m -> s", "PL"))
        assert matches[0].rules == ("implication_swap",)
        assert matches[0].position == ()

    def test_and_or_confusion(self):
        matches = detect_misconceptions(parse("x | y", "PL"), parse("x & y", "PL"))
        assert matches[0].rules == ("and_or_confusion",)

    def test_equivalent_input_yields_nothing(self):
        assert detect_misconceptions(parse("x -> y", "PL"), parse("~x | y", "PL")) == []

    def test_rewritten_formula_is_equivalent_to_target(self):
        student, target = parse("(a -> b) | c", "PL"), parse("(b -> a) | c", "PL")
        for match in detect_misconceptions(student, target):
            assert pl_equivalent(match.rewritten, target).equivalent

    def test_nested_position(self):
        student = parse("c & (s -> m)", "PL")
        target = parse("c & (m -> s)", "PL")
        matches = detect_misconceptions(student, target)
        assert matches[0].rules == ("implication_swap",)
        assert matches[0].position == (1,)

    def test_box_diamond_swap(self):
        matches = detect_misconceptions(parse("[]A", "ML"), parse("<>A", "ML"))
        assert matches[0].rules == ("box_diamond_swap",)

    def test_depth_two_composition(self):
        student = parse("x | (a -> b)", "PL")
        target = parse("x & (b -> a)", "PL")
        matches = detect_misconceptions(student, target)
        assert matches, "two composed rewrites should be found"
        assert matches[0].depth == 2

    def test_ordered_by_depth_then_position(self):
        student = parse("(s -> m) & (s -> m)", "PL")
        target = parse("(m -> s) & (s -> m)", "PL")
        matches = detect_misconceptions(student, target)
        assert matches[0].depth == 1
        assert matches[0].position == (0,)


class TestDistinguishingModel:
    def test_pl_witness_payload(self):
        ctx = construction_ctx("x | y", "x & y")
        item = generate_distinguishing_model(ctx)
        valuation = item.payload["witness"]
        assert eval_pl(parse("x | y", "PL"), valuation) != eval_pl(parse("x & y", "PL"), valuation)

    def test_ml_witness_is_pointed_structure(self):
        ctx = construction_ctx("<>A", "[]A", logic="ML")
        item = generate_distinguishing_model(ctx)
        witness = item.payload["witness"]
        assert witness.designated is not None
        assert not ml_equivalent(parse("<>A", "ML"), parse("[]A", "ML")).equivalent
        assert check_model(parse("~(<>A <-> []A)", "ML"), witness).satisfies

    def test_equivalent_pair_yields_nothing(self):
        ctx = construction_ctx("x -> y", "~x | y")
        assert generate_distinguishing_model(ctx) is None


class TestNodeSetFeedback:
    @pytest.fixture
    def graph(self):
        return ColoredGraph(frozenset({"1", "2", "3"}), frozenset({("1", "2")}))

    def test_subset_case(self, graph):
        items = node_set_feedback({"1"}, {"1", "2"}, graph)
        assert [i.generator for i in items] == ["correctness", "subset_relation", "node_diff"]
        assert "subset" in items[1].message
        assert items[2].payload == {"missing": ["2"], "extra": []}

    def test_correct_case(self, graph):
        items = node_set_feedback({"1", "2"}, {"1", "2"}, graph)
        assert [i.generator for i in items] == ["correctness"]

    def test_incomparable_case(self, graph):
        items = node_set_feedback({"1", "3"}, {"1", "2"}, graph)
        assert "incomparable" in items[1].message
        assert items[2].payload == {"missing": ["2"], "extra": ["3"]}

    def test_superset_case(self, graph):
        items = node_set_feedback({"1", "2", "3"}, {"1", "2"}, graph)
        assert "superset" in items[1].message


class TestStrategyDsl:
    def test_single_rule(self):
        strategy = parse_strategy("rule r1: when always run correctness stop\n")
        assert len(strategy.rules) == 1
        assert strategy.rules[0].stop

    def test_forward_reference_rejected(self):
        with pytest.raises(ParseError) as err:
            parse_strategy(
                """
                rule r1: when produced(misconception_hint) run correctness
                rule r2: when always run misconception_hint
                """
            )
        assert err.value.position == 2  # line number of the offending rule

    def test_unknown_generator(self):
        with pytest.raises(ParseError):
            parse_strategy("rule r1: when always run nonsense\n")

    def test_round_trip(self):
        for strategy in BUILTIN_STRATEGIES.values():
            assert parse_strategy(render_strategy(strategy)) == strategy

    def test_comments_and_blanks(self):
        strategy = parse_strategy(
            "# full cascade\n\nrule r1: when always run correctness\n"
        )
        assert len(strategy.rules) == 1

    def test_syntax_error_line_number(self):
        with pytest.raises(ParseError) as err:
            parse_strategy("rule r1: when always run correctness\nrule broken\n")
        assert err.value.position == 2


class TestCorrectnessAgreement:
    def test_matches_equivalence_oracles(self):
        from helpers import random_pl

        rng = Random(71)
        for _ in range(60):
            student = random_pl(rng, ["a", "b"], 3)
            target = random_pl(rng, ["a", "b"], 3)
            ctx = FeedbackContext(
                "construct_formula", answer=student, target=target, logic="PL"
            )
            assert ctx.is_correct == pl_equivalent(student, target).equivalent
