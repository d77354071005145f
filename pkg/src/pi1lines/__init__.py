"""Fundamental groups of real line arrangement complements.

Braid monodromy and van Kampen presentations for the affine and projective
complements, plus a mechanical check that the affine group splits as the
projective group times a central infinite cyclic factor.
"""

from .braids import BraidWord, artin_apply, braid_equal, half_twist, underlying_permutation
from .decomposition import DecompositionReport, verify_decomposition
from .errors import (
    DegenerateLine,
    DuplicateLine,
    GeneratorOutOfRange,
    InternalError,
    MissingProjectiveRelation,
    NotCentral,
    NotTransversal,
    ParseError,
    Pi1Error,
    PrecondParallel,
    SelfReference,
    SimplificationFailure,
    StrandMismatch,
    UnbalancedRelator,
)
from .geometry import (
    Arrangement,
    IntersectionPoint,
    LefschetzPairList,
    append_transversal_line,
    genericity_transform,
    intersection_lattice,
    lefschetz_pairs,
    parse_arrangement,
)
from .invariants import (
    FanPrediction,
    abelianization,
    compare_arrangements,
    fan_consistency,
    fan_predict,
    oka_sakamoto_check,
    smith_normal_form,
)
from .presentation import (
    Presentation,
    cancel_central_generator,
    eliminate_by_projective_relation,
    substitute,
)
from .vankampen import (
    MonodromyEntry,
    affine_presentation,
    affine_via_transversal,
    monodromy_table,
    point_relations,
    projective_presentation,
)
from .words import commutator, cyclic_canonical, exponent_sum, free_reduce, inverse

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "BraidWord",
    "DecompositionReport",
    "DegenerateLine",
    "DuplicateLine",
    "FanPrediction",
    "GeneratorOutOfRange",
    "InternalError",
    "IntersectionPoint",
    "LefschetzPairList",
    "MissingProjectiveRelation",
    "MonodromyEntry",
    "NotCentral",
    "NotTransversal",
    "ParseError",
    "Pi1Error",
    "PrecondParallel",
    "Presentation",
    "SelfReference",
    "SimplificationFailure",
    "StrandMismatch",
    "UnbalancedRelator",
    "abelianization",
    "affine_presentation",
    "affine_via_transversal",
    "append_transversal_line",
    "artin_apply",
    "braid_equal",
    "cancel_central_generator",
    "commutator",
    "compare_arrangements",
    "cyclic_canonical",
    "eliminate_by_projective_relation",
    "exponent_sum",
    "fan_consistency",
    "fan_predict",
    "free_reduce",
    "genericity_transform",
    "half_twist",
    "intersection_lattice",
    "inverse",
    "lefschetz_pairs",
    "monodromy_table",
    "oka_sakamoto_check",
    "parse_arrangement",
    "point_relations",
    "projective_presentation",
    "smith_normal_form",
    "substitute",
    "underlying_permutation",
    "verify_decomposition",
]
