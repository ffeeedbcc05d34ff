"""Ranks and first Chern classes of sl_2m conformal blocks bundles with rectangular weights."""

from .bundles import (
    BundleSpec,
    Classification,
    RankClass,
    Reason,
    classify,
    is_maximal,
    kp_decompose,
    rank_exact,
    result_record,
    sl2_rank,
    sp_relabel,
    witten_s,
)
from .chern import (
    CasimirInput,
    DivisorCombo,
    FCurve,
    LevelOneVector,
    casimir,
    casimir_scaling_check,
    decompose,
    decompose_by_columns,
    degree4,
    fcurve_degree,
    fcurves,
    make_vab,
    verify_decomposition,
)
from .errors import FillError, InvariantViolation, UnsupportedError, ValidationError
from .fills import (
    Tableau,
    combined_fill,
    forward_fill,
    is_proper,
    is_semistandard,
    low_row_step,
    modify_tableau,
    reverse_fill,
    reverse_trace,
)
from .kostka import (
    column_removal_unique,
    count_proper_tableaux,
    count_tableaux,
    enumerate_tableaux,
    peel_last_column,
    quantum_kostka,
)
from .shapes import Box, Partition, SkewShape, low_row, quantum_shape, reduced_shape, rim_hook_shape, transpose

__version__ = "0.1.0"
__all__ = [
    "BundleSpec",
    "Classification",
    "RankClass",
    "Reason",
    "classify",
    "is_maximal",
    "kp_decompose",
    "rank_exact",
    "result_record",
    "sl2_rank",
    "sp_relabel",
    "witten_s",
    "CasimirInput",
    "DivisorCombo",
    "FCurve",
    "LevelOneVector",
    "casimir",
    "casimir_scaling_check",
    "decompose",
    "decompose_by_columns",
    "degree4",
    "fcurve_degree",
    "fcurves",
    "make_vab",
    "verify_decomposition",
    "FillError",
    "InvariantViolation",
    "UnsupportedError",
    "ValidationError",
    "Tableau",
    "combined_fill",
    "forward_fill",
    "is_proper",
    "is_semistandard",
    "low_row_step",
    "modify_tableau",
    "reverse_fill",
    "reverse_trace",
    "column_removal_unique",
    "count_proper_tableaux",
    "count_tableaux",
    "enumerate_tableaux",
    "peel_last_column",
    "quantum_kostka",
    "Box",
    "Partition",
    "SkewShape",
    "low_row",
    "quantum_shape",
    "reduced_shape",
    "rim_hook_shape",
    "transpose",
]
