"""Exact F-isolation numbers, extremal constructions and verification suites."""

from ._isolab import (
    ConstructionError,
    ExtremalClass,
    Graph,
    Pattern,
    Family,
    SolveResult,
    automorphism_orbits,
    canonical_form,
    domination_number,
    enumerate_f_plus_e,
    enumerate_graphs,
    enumerate_pure_special,
    enumerate_special,
    is_isolating,
    is_isomorphic,
    is_special_pair,
    parse_graph6,
    emit_graph6,
    pattern,
    recognize_extremal,
    solve,
    solve_oracle,
    verify,
)

__all__ = [
    "ConstructionError",
    "ExtremalClass",
    "Graph",
    "Pattern",
    "Family",
    "SolveResult",
    "automorphism_orbits",
    "canonical_form",
    "domination_number",
    "enumerate_f_plus_e",
    "enumerate_graphs",
    "enumerate_pure_special",
    "enumerate_special",
    "is_isolating",
    "is_isomorphic",
    "is_special_pair",
    "parse_graph6",
    "emit_graph6",
    "pattern",
    "recognize_extremal",
    "solve",
    "solve_oracle",
    "verify",
]
