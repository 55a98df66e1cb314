"""Exact combinatorics of sl(n) level-k fusion coefficients.

Lattice-path counting for Littlewood-Richardson and fusion coefficients,
the sign-reversing involutions behind them, and exhaustive verification
sweeps against a signed-sum oracle.
"""

from .coefficients import (
    UnsupportedShape,
    count_paths,
    count_restricted_paths,
    duality_check,
    fusion_expand,
    fusion_oracle,
    fusion_rule,
    fusion_single_column,
    fusion_tableaux,
    gepner_witten,
    lr_lattice,
    lr_paths,
    omega_terms,
    restricted_standard_count,
    standard_count,
    verify_restricted_path_identity,
)
from .involutions import (
    D2Certificate,
    SignedTerm,
    canonical_violation,
    in_D1,
    in_D2,
    is_k_fusion,
    phi,
    phi1,
    phi2,
    psi,
)
from .partitions import (
    FusionContext,
    conjugate,
    format_partition,
    is_border,
    is_edge,
    is_restricted,
    normalize,
    parse_partition,
    quotient,
    rank_level_dual,
    sigma_dot,
)
from .paths import (
    Box,
    LatticePath,
    PathTableau,
    block_has_bot,
    block_has_top,
    column_strip_targets,
    diagonal_label,
    enumerate_paths,
    path_to_tableau,
)
from .words import BracketWord, fits, lower_f, raise_e, render, word_of, word_type

__all__ = [
    "Box",
    "BracketWord",
    "D2Certificate",
    "FusionContext",
    "LatticePath",
    "PathTableau",
    "SignedTerm",
    "UnsupportedShape",
    "block_has_bot",
    "block_has_top",
    "canonical_violation",
    "column_strip_targets",
    "conjugate",
    "count_paths",
    "count_restricted_paths",
    "diagonal_label",
    "duality_check",
    "enumerate_paths",
    "fits",
    "format_partition",
    "fusion_expand",
    "fusion_oracle",
    "fusion_rule",
    "fusion_single_column",
    "fusion_tableaux",
    "gepner_witten",
    "in_D1",
    "in_D2",
    "is_border",
    "is_edge",
    "is_k_fusion",
    "is_restricted",
    "lower_f",
    "lr_lattice",
    "lr_paths",
    "normalize",
    "omega_terms",
    "parse_partition",
    "path_to_tableau",
    "phi",
    "phi1",
    "phi2",
    "psi",
    "quotient",
    "raise_e",
    "rank_level_dual",
    "render",
    "restricted_standard_count",
    "sigma_dot",
    "standard_count",
    "verify_restricted_path_identity",
    "word_of",
    "word_type",
]
