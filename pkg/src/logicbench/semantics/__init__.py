"""Interpretations and evaluation for all three logics."""

from .evaluate import (
    EvalTrace,
    ModelCheckResult,
    check_model,
    eval_fo,
    eval_ml,
    eval_pl,
    query_nodes,
)
from .structures import ColoredGraph, KripkeStructure, Valuation
from .tables import (
    EvaluationTable,
    TruthTable,
    build_evaluation_table,
    build_truth_table,
    valuation_for_row,
)

__all__ = [
    "EvalTrace", "ModelCheckResult", "check_model", "eval_fo", "eval_ml",
    "eval_pl", "query_nodes",
    "ColoredGraph", "KripkeStructure", "Valuation",
    "EvaluationTable", "TruthTable", "build_evaluation_table",
    "build_truth_table", "valuation_for_row",
]
