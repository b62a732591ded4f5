"""Step-by-step verification engines for student-driven proofs."""

from .autoplay import AutoPlayResult, autoplay
from .bisim_run import (
    BACK_FAIL,
    FORTH_FAIL,
    LABEL_MISMATCH,
    BisimulationState,
    RemovalJustification,
    bisim_conclude,
    bisim_remove,
    new_bisim_state,
)
from .horn_run import (
    HornMarkingState,
    horn_conclude,
    horn_step,
    new_horn_state,
)
from .resolution import (
    Derivation,
    ResolutionGraph,
    new_resolution_graph,
    renamed_parents,
    resolve_fo,
    resolve_pl,
    unify,
)
from .table_check import table_all_correct, truth_table_check
from .tableau import (
    Tableau,
    TableauNode,
    TableauStatus,
    branch_leaves,
    branch_nodes,
    new_tableau,
    open_branches,
    tableau_apply,
    tableau_close,
    tableau_extract_model,
    tableau_status,
)
from .verdict import StepVerdict

__all__ = [
    "AutoPlayResult", "autoplay",
    "BACK_FAIL", "FORTH_FAIL", "LABEL_MISMATCH", "BisimulationState",
    "RemovalJustification", "bisim_conclude", "bisim_remove", "new_bisim_state",
    "HornMarkingState", "horn_conclude", "horn_step", "new_horn_state",
    "Derivation", "ResolutionGraph", "new_resolution_graph", "renamed_parents",
    "resolve_fo", "resolve_pl", "unify",
    "table_all_correct", "truth_table_check",
    "Tableau", "TableauNode", "TableauStatus", "branch_leaves", "branch_nodes",
    "new_tableau", "open_branches", "tableau_apply", "tableau_close",
    "tableau_extract_model", "tableau_status",
    "StepVerdict",
]
