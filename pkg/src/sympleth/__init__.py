"""Exact symmetric-function algebra over the rationals, with several routes
to Schur expansions of plethysms and a command-line front end."""

from .partitions import (
    conjugate,
    corner_count,
    corners,
    durfee,
    is_even,
    is_threshold,
    make_partition,
    opposite_cell,
    partitions_of,
    row_pair_involution,
)
from .symfunc import (
    SymFunc,
    elementary,
    hall_inner_product,
    homogeneous,
    index_add,
    monomial,
    omega,
    powersum,
    restrict_length,
    schur,
)
from .lr import LRContext, f_perp, lr_coefficient, pieri_col, pieri_row, schur_perp
from .plethysm import (
    PerpSequence,
    PlethysmContext,
    closed_form,
    expand_schur,
    monomial_expansion,
    perp_sequence,
    plethysm,
    plethysm_powersum,
    plethysm_sperp,
)

__version__ = "0.1.0"
