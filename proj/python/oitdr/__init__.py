"""Outer-independent total double Roman domination."""

from ._oitdr import (
    Graph,
    LimitExceeded,
    ParseError,
    PreconditionError,
    bounds_csv,
    build_gadget,
    check_oitdrdf,
    cycle_labeling,
    domination_number,
    enumerate_optimal,
    family,
    family_members,
    from_edge_list,
    girth,
    is_corona,
    is_tree,
    matching_number,
    path_labeling,
    solve_oidrd,
    solve_oitdrd,
    solve_tree,
    to_edge_list,
    total_coindependent_number,
    tree_bounds_csv,
    violation,
)

__all__ = [name for name in dir() if not name.startswith("_")]
