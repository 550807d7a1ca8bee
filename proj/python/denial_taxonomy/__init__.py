"""Condition-based denial-attack classification engine."""

from ._denial_taxonomy import (
    classify,
    classify_flows,
    generate_scenario,
    is_consistent,
    lattice_dot,
    lattice_edges,
    lattice_join,
    lattice_leq,
    lattice_meet,
    lattice_path,
    nearest_classes,
    required_conditions,
    self_check,
    venn_region,
)

__all__ = [
    "classify",
    "classify_flows",
    "generate_scenario",
    "is_consistent",
    "lattice_dot",
    "lattice_edges",
    "lattice_join",
    "lattice_leq",
    "lattice_meet",
    "lattice_path",
    "nearest_classes",
    "required_conditions",
    "self_check",
    "venn_region",
]
