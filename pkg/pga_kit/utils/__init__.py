"""Utility modules for pga-kit."""

from .decorators import wrap_errors
from .display import column_width, truncate_list_display
from .fuzzy import fuzzy_match, get_match_fn, matching_names, substring_match, word_boundary_match

__all__ = [
    "wrap_errors",
    "column_width",
    "truncate_list_display",
    "fuzzy_match",
    "substring_match",
    "word_boundary_match",
    "get_match_fn",
    "matching_names",
]
