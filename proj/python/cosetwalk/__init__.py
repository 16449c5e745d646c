"""Exact double-coset lumping of random walks on finite groups, and the
skewed r-random-to-top shuffle family.

All rationals cross the boundary as "p/q" strings; use fractions.Fraction
to compute with them exactly on the Python side.
"""

from ._core import (
    binomial_mixture_weights,
    char_poly,
    check_lumping,
    compose_cycles,
    convergence_report,
    double_cosets,
    group_elements,
    group_order,
    inverse_cycles,
    is_ergodic,
    is_reversible,
    lump,
    lumped_matrix,
    mixture_matrix,
    predicted_spectrum,
    shuffle_set,
    simulate,
    simultaneous_spectra,
    skewed_matrix,
    stationary,
    step_distribution,
    tv_distance,
    type_of,
    type_s_matrix,
    verify_eigenvalue,
    verify_paper,
)

__all__ = [
    "binomial_mixture_weights",
    "char_poly",
    "check_lumping",
    "compose_cycles",
    "convergence_report",
    "double_cosets",
    "group_elements",
    "group_order",
    "inverse_cycles",
    "is_ergodic",
    "is_reversible",
    "lump",
    "lumped_matrix",
    "mixture_matrix",
    "predicted_spectrum",
    "shuffle_set",
    "simulate",
    "simultaneous_spectra",
    "skewed_matrix",
    "stationary",
    "step_distribution",
    "tv_distance",
    "type_of",
    "type_s_matrix",
    "verify_eigenvalue",
    "verify_paper",
]
