"""Exact Lah, Stirling, Bell and Lah-Bell computations."""

from ._lahbell import (
    PrecisionNotReached,
    PreconditionError,
    UnknownNameError,
    bell_number,
    count_ordered_partitions,
    count_permutations_by_cycles,
    count_set_partitions,
    dobinski,
    families,
    gf,
    gf_names,
    lah,
    lah_bell_number,
    poly,
    poly_terms,
    stirling1,
    stirling2,
    table,
    verify,
)

__all__ = [
    "PrecisionNotReached",
    "PreconditionError",
    "UnknownNameError",
    "bell_number",
    "count_ordered_partitions",
    "count_permutations_by_cycles",
    "count_set_partitions",
    "dobinski",
    "families",
    "gf",
    "gf_names",
    "lah",
    "lah_bell_number",
    "poly",
    "poly_terms",
    "stirling1",
    "stirling2",
    "table",
    "verify",
]
