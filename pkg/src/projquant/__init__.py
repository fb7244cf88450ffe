"""Algebraic machinery of projectively equivariant quantization.

Young-diagram classification of GL(m) irreducibles, restriction to GL(m-1),
Casimir eigenvalues and resonant weights, tensor-product decompositions,
and an exact flat-space engine that independently verifies the eigenvalue
formula and constructs equivariant quantizations for density-valued
symbols.
"""

from .branching import (
    BranchLabel,
    branch_labels,
    component,
    max_removal_embedding,
    zero_removal_embedding,
)
from .casimir import (
    EigenvaluePoly,
    eigenvalue,
    is_resonant,
    resonances,
    resonances_for_symbols,
    resonances_generic,
)
from .diagrams import (
    IrrepLabel,
    YoungDiagram,
    canonicalize,
    char_eval,
    dimension,
    dual,
    extend_rank,
    extend_rank_dual,
    schur_eval,
)
from .errors import ResonantWeight
from .tensor import Decomposition, littlewood_richardson, pieri, symbol_rep

__version__ = "0.1.0"

__all__ = [
    "BranchLabel",
    "Decomposition",
    "EigenvaluePoly",
    "IrrepLabel",
    "ResonantWeight",
    "YoungDiagram",
    "branch_labels",
    "canonicalize",
    "char_eval",
    "component",
    "dimension",
    "dual",
    "eigenvalue",
    "extend_rank",
    "extend_rank_dual",
    "is_resonant",
    "littlewood_richardson",
    "max_removal_embedding",
    "pieri",
    "resonances",
    "resonances_for_symbols",
    "resonances_generic",
    "schur_eval",
    "symbol_rep",
    "zero_removal_embedding",
]
