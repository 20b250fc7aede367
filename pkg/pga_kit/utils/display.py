"""Short listings for CLI messages: formula suggestions and blade headers."""

from typing import Sequence


def truncate_list_display(
    items: Sequence[str],
    max_items: int = 3,
    separator: str = ", ",
    empty: str = "(no items)",
) -> str:
    """Join the first `max_items` entries and count the rest.

    >>> truncate_list_display(["dist-points", "dist-points3", "dist-point-plane", "angle-lines"])
    'dist-points, dist-points3, dist-point-plane (+1 more)'
    >>> truncate_list_display([], empty="(no formulas)")
    '(no formulas)'
    """
    if not items:
        return empty
    shown = separator.join(items[: max(max_items, 0)])
    hidden = len(items) - max_items
    if hidden <= 0:
        return shown
    return f"{shown} (+{hidden} more)" if shown else f"(+{hidden} more)"


def column_width(labels: Sequence[str], minimum: int = 1) -> int:
    """Width that fits every label, used to align plain-text tables."""
    return max([minimum, *(len(label) for label in labels)])
