"""Exact erasure-channel analysis for binary linear block codes.

Stopping-set, dead-end-set, incorrigible-set and weight enumerators for
arbitrary parity-check matrices; peeling and optimal erasure decoders;
parity-check matrix constructions with optimal enumerators; row-count
bounds; and a reproducible Monte Carlo channel harness.
"""

from .codes import (
    Enumerator,
    LinearCode,
    catalog,
    direct_sum,
    full_code,
    hamming_7_4,
    repetition,
    rm_8_4_4,
    zero_code,
)
from .construct import (
    BoundReport,
    bad_matrix,
    binary_entropy,
    complete_matrix,
    minimal_matrix_search,
    redundancy_bounds,
    weight_bounded_dual_matrix,
)
from .decoder import (
    AMBIGUOUS,
    DECODED,
    STALLED,
    ChannelModelViolation,
    DecodeOutcome,
    ErasureClass,
    ReceivedWord,
    classify_erasure_set,
    is_parity_check_of,
    iterative_decode,
    optimal_decode,
)
from .gf2 import (
    BitMatrix,
    format_matrix,
    indices_from_mask,
    mask_from_indices,
    null_space_basis,
    parse_matrix,
    permute_columns,
    rank,
    row_space_iter,
    rref,
    select_columns,
    solve,
    transpose,
)
from .harness import (
    ChannelConfig,
    PerformanceReport,
    Table1Report,
    analytic_pud,
    monte_carlo,
    table1_report,
)
from .stopsets import (
    Decomposition,
    StoppingProfile,
    dead_end_enumerator,
    incorrigible_enumerator,
    is_codeword_support,
    is_incorrigible,
    is_stopping_set,
    minimum_stopping_decomposition,
    optimal_enumerators,
    peel_closure,
    profile,
    stopping_distance,
    stopping_set_enumerator,
)

__all__ = [
    "AMBIGUOUS",
    "BitMatrix",
    "BoundReport",
    "ChannelConfig",
    "ChannelModelViolation",
    "DECODED",
    "DecodeOutcome",
    "Decomposition",
    "Enumerator",
    "ErasureClass",
    "LinearCode",
    "PerformanceReport",
    "ReceivedWord",
    "STALLED",
    "StoppingProfile",
    "Table1Report",
    "analytic_pud",
    "bad_matrix",
    "binary_entropy",
    "catalog",
    "classify_erasure_set",
    "complete_matrix",
    "dead_end_enumerator",
    "direct_sum",
    "format_matrix",
    "full_code",
    "hamming_7_4",
    "incorrigible_enumerator",
    "indices_from_mask",
    "is_codeword_support",
    "is_incorrigible",
    "is_parity_check_of",
    "is_stopping_set",
    "iterative_decode",
    "mask_from_indices",
    "minimal_matrix_search",
    "minimum_stopping_decomposition",
    "monte_carlo",
    "null_space_basis",
    "optimal_decode",
    "optimal_enumerators",
    "parse_matrix",
    "peel_closure",
    "permute_columns",
    "profile",
    "rank",
    "redundancy_bounds",
    "repetition",
    "rm_8_4_4",
    "row_space_iter",
    "rref",
    "select_columns",
    "solve",
    "stopping_distance",
    "stopping_set_enumerator",
    "table1_report",
    "transpose",
    "weight_bounded_dual_matrix",
    "zero_code",
]
