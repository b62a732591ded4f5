"""Decision procedures used for grading and feedback."""

from .bisim import (
    BisimRelation,
    distinguishes,
    fo_nonequivalence_witness_check,
    max_bisimulation,
    pair_violates,
)
from .horn import HornResult, horn_mark
from .modal import ml_equivalent, ml_satisfiable
from .nnf import to_nnf
from .sat import EquivResult, SatResult, pl_equivalent, pl_satisfiable

__all__ = [
    "BisimRelation", "distinguishes", "fo_nonequivalence_witness_check",
    "max_bisimulation", "pair_violates",
    "HornResult", "horn_mark",
    "ml_equivalent", "ml_satisfiable",
    "to_nnf",
    "EquivResult", "SatResult", "pl_equivalent", "pl_satisfiable",
]
