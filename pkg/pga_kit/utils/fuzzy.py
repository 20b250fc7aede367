"""Name matching for the formula catalog.

Three styles, selected by `display.formula_match_style`:
- substring: the query appears verbatim
- fuzzy: query characters appear in order (fzf-style)
- word_boundary: like fuzzy, but tries the starts of kebab-case words first
"""

from typing import Callable, Iterable, Literal

MatchStyle = Literal["substring", "fuzzy", "word_boundary"]


def substring_match(query: str, text: str) -> bool:
    return query in text


def fuzzy_match(query: str, text: str) -> bool:
    """True if every query character appears in `text`, in order."""
    remaining = iter(text)
    return all(char in remaining for char in query)


def word_boundary_match(query: str, text: str) -> bool:
    """Match query characters against word starts, falling back to `fuzzy_match`.

    `dpl` matches `dist-point-line` through the initials of its words.
    """
    if not query:
        return True
    if not text:
        return False

    query_idx = 0
    at_boundary = True
    for char in text:
        if query_idx < len(query) and at_boundary and char == query[query_idx]:
            query_idx += 1
        at_boundary = not char.isalnum()
    if query_idx == len(query):
        return True
    return fuzzy_match(query, text)


def get_match_fn(style: MatchStyle) -> Callable[[str, str], bool]:
    """Matching function for a style name; unknown styles use substring matching."""
    match_fns: dict[MatchStyle, Callable[[str, str], bool]] = {
        "substring": substring_match,
        "fuzzy": fuzzy_match,
        "word_boundary": word_boundary_match,
    }
    return match_fns.get(style, substring_match)


def matching_names(query: str, names: Iterable[str], style: MatchStyle) -> list[str]:
    """Names matching `query`, exact substring hits first, then alphabetical."""
    needle = query.strip().lower().replace("_", "-")
    match = get_match_fn(style)
    hits = [name for name in names if match(needle, name.lower())]
    return sorted(hits, key=lambda name: (needle not in name, name))
