"""Feedback generators, misconception rules, and rule-based strategies."""

from .generators import (
    GENERATORS,
    generate_distinguishing_model,
    node_set_feedback,
    run_generator,
)
from .items import ERROR, HINT, INFO, SUCCESS, FeedbackContext, FeedbackItem, equivalence
from .misconceptions import (
    BUILTIN_RULES,
    MisconceptionMatch,
    MisconceptionRule,
    detect_misconceptions,
)
from .strategy import (
    BUILTIN_STRATEGIES,
    Condition,
    FeedbackStrategy,
    StrategyRule,
    parse_strategy,
    render_strategy,
    resolve_strategy,
    run_strategy,
)

__all__ = [
    "GENERATORS", "generate_distinguishing_model", "node_set_feedback",
    "run_generator",
    "ERROR", "HINT", "INFO", "SUCCESS", "FeedbackContext", "FeedbackItem",
    "equivalence",
    "BUILTIN_RULES", "MisconceptionMatch", "MisconceptionRule",
    "detect_misconceptions",
    "BUILTIN_STRATEGIES", "Condition", "FeedbackStrategy", "StrategyRule",
    "parse_strategy", "render_strategy", "resolve_strategy", "run_strategy",
]
