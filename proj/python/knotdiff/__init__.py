"""Regional-change calculus on knot diagrams: exact resolutions, alternating
sums, boundary complex, and Vassiliev vanishing checks."""

from ._core import (
    Diagram,
    alternating_sum,
    boundary,
    class_label,
    conway,
    difference_rank,
    group_alternating_sum,
    jones,
    jones_series_coefficient,
    v2,
    vanishing_check,
    weighted_sum,
)

__all__ = [
    "Diagram",
    "alternating_sum",
    "boundary",
    "class_label",
    "conway",
    "difference_rank",
    "group_alternating_sum",
    "jones",
    "jones_series_coefficient",
    "v2",
    "vanishing_check",
    "weighted_sum",
]
