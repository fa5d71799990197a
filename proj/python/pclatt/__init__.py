"""Finite pseudocomplemented lattices: implications, deductive systems, congruences."""

from ._core import (
    Lattice,
    LatticeError,
    arrow_table,
    check_law,
    classify,
    congruences,
    darrow_table,
    deductive_systems,
    dense_elements,
    ds_closure,
    filters,
    generate,
    is_deductive_system,
    is_filter,
    is_isomorphic,
    laws,
    pseudocomplement,
    run_suite,
    suite_json,
    theta,
    theta_report,
)

__all__ = [
    "Lattice",
    "LatticeError",
    "arrow_table",
    "check_law",
    "classify",
    "congruences",
    "darrow_table",
    "deductive_systems",
    "dense_elements",
    "ds_closure",
    "filters",
    "generate",
    "is_deductive_system",
    "is_filter",
    "is_isomorphic",
    "laws",
    "pseudocomplement",
    "run_suite",
    "suite_json",
    "theta",
    "theta_report",
]
