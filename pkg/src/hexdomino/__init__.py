"""Exact enumeration and identity verification for hexagonal double-strip tilings.

A strip of n hexagonal cells (odd indices on the lower row, even on the
upper) is tiled by squares and three kinds of dominoes.  The package counts
these tilings (Tetranacci numbers), enumerates and renders them, carries
executable bijections onto single-strip square/domino tilings (Fibonacci
numbers), and verifies a registry of closed-form identities both
symbolically and against a brute-force enumeration oracle.
"""
from .correspondences import (
    SingleStripTiling,
    SingleTile,
    Thm2Report,
    enumerate_single_strip,
    lemma2_from_single,
    lemma2_to_single,
    lemma3_from_single,
    lemma3_to_single,
    thm2_map,
    thm2_verify,
)
from .enumerator import (
    BOTH_HORIZONTALS,
    BREAKABLE,
    CLASS_PRESETS,
    DEFAULT_MAX_CELLS,
    HIGH_HORIZONTAL,
    INCLINED_CROSS,
    LOW_HORIZONTAL,
    MAX_CELLS_ENV,
    CapExceeded,
    CrossingDescriptor,
    classify_diagonal,
    count_by_enumeration,
    enumerate_tilings,
    histogram_by_descriptor,
    max_cells,
    partition_by_first,
)
from .identities import (
    ABSENT,
    CORRECTED_VARIANT,
    PAPER_STATED,
    GroupCheck,
    IdentityDescriptor,
    IdentityRecord,
    OracleOutcome,
    VerificationReport,
    evaluate,
    get_identity,
    list_identities,
    thm3_expected_histogram,
    verify_range,
)
from .sequences import closed_count, fibonacci_comb, pow2, tetranacci
from .strip_model import (
    ALL_CLASSES,
    DOMINO_CLASSES,
    HORIZONTAL,
    LEFT_INCLINED,
    RIGHT_INCLINED,
    SQUARE,
    ParseError,
    Tile,
    Tiling,
    UnbreakableError,
    cells_of,
    first_tile_of_class,
    is_breakable,
    parse_tokens,
    render_ascii,
    split_at,
    tile_at,
    to_tokens,
    validate,
)

__all__ = [
    "ABSENT",
    "ALL_CLASSES",
    "BOTH_HORIZONTALS",
    "BREAKABLE",
    "CLASS_PRESETS",
    "CORRECTED_VARIANT",
    "CapExceeded",
    "CrossingDescriptor",
    "DEFAULT_MAX_CELLS",
    "DOMINO_CLASSES",
    "GroupCheck",
    "HIGH_HORIZONTAL",
    "HORIZONTAL",
    "IdentityDescriptor",
    "IdentityRecord",
    "INCLINED_CROSS",
    "LEFT_INCLINED",
    "LOW_HORIZONTAL",
    "MAX_CELLS_ENV",
    "OracleOutcome",
    "PAPER_STATED",
    "ParseError",
    "RIGHT_INCLINED",
    "SQUARE",
    "SingleStripTiling",
    "SingleTile",
    "Thm2Report",
    "Tile",
    "Tiling",
    "UnbreakableError",
    "VerificationReport",
    "cells_of",
    "classify_diagonal",
    "closed_count",
    "count_by_enumeration",
    "enumerate_single_strip",
    "enumerate_tilings",
    "evaluate",
    "fibonacci_comb",
    "first_tile_of_class",
    "get_identity",
    "histogram_by_descriptor",
    "is_breakable",
    "lemma2_from_single",
    "lemma2_to_single",
    "lemma3_from_single",
    "lemma3_to_single",
    "list_identities",
    "max_cells",
    "parse_tokens",
    "partition_by_first",
    "pow2",
    "render_ascii",
    "split_at",
    "tetranacci",
    "thm2_map",
    "thm2_verify",
    "thm3_expected_histogram",
    "tile_at",
    "to_tokens",
    "validate",
    "verify_range",
]
