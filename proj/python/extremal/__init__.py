"""Extremal set theory toolkit: families, shifting, constructions, closed forms and an exact oracle."""

from ._extremal import (
    ArgumentError,
    CapacityError,
    Family,
    ParseError,
    SearchResult,
    build,
    clique_number,
    conjecture_rhs,
    covering_number,
    cross_bound,
    exact_m,
    exact_m_star,
    exact_m_via_stars,
    family_from_json,
    family_to_json,
    invariants,
    is_shifted,
    m_closed,
    m_star_closed,
    matching_number,
    run_suite,
    shift_closure,
    shift_ij,
    size_A,
)

__all__ = [
    "ArgumentError",
    "CapacityError",
    "Family",
    "ParseError",
    "SearchResult",
    "build",
    "clique_number",
    "conjecture_rhs",
    "covering_number",
    "cross_bound",
    "exact_m",
    "exact_m_star",
    "exact_m_via_stars",
    "family_from_json",
    "family_to_json",
    "invariants",
    "is_shifted",
    "m_closed",
    "m_star_closed",
    "matching_number",
    "run_suite",
    "shift_closure",
    "shift_ij",
    "size_A",
]
