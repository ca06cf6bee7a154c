"""Exact analysis of supermodular set functions: cores, core structure and extremality."""

from .altcriteria import (
    MatroidBases,
    ModularRep,
    convex_measure_extreme,
    convex_measure_game,
    matroid_bases,
    nguyen_extreme,
    rw_canonical_representation,
    rw_nondegenerate,
)
from .cimodels import CIModel, ElementaryTriplet, ci_holds, ci_model, equivalent, face_leq, is_coatom
from .coregeo import (
    CoreStructure,
    PayoffArray,
    core_structure,
    core_vertices,
    general_core_vertices,
    is_exact,
    lovasz_extension,
    marginal_vector,
    min_representation_holds,
    payoff_array,
)
from .errors import SupermodError
from .extremality import (
    ExtremalityVerdict,
    Status,
    build_ab_system,
    facet_oracle_is_extreme,
    is_extreme,
    is_indecomposable_gp,
)
from .gamecore import (
    Game,
    MobiusCoefficients,
    VariableSet,
    delta,
    from_rank_ci,
    from_rank_dual,
    is_matroid_rank,
    is_standardized,
    is_supermodular,
    make_game,
    mobius,
    rank_self_dual,
    standardize,
    support,
    to_rank_ci,
    to_rank_dual,
)
from .linalg import RationalMatrix, kernel_basis, solve_square

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
