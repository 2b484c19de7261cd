"""Shared domain types for translocation-aware searching.

Strings are plain ``str`` objects; every character is one symbol.  Window
start positions reported to callers are 0-based.  Internal table math mostly
follows 1-based prefix lengths, which keeps it aligned with the usual
dynamic-programming formulation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

VARIANTS = ("a", "b", "c", "d")
ENGINES = ("oracle", "dp", "dawg", "align")


def alphabet_of(*strings: str) -> tuple[str, ...]:
    """Sorted tuple of the distinct symbols appearing in the inputs."""
    seen: set[str] = set()
    for s in strings:
        seen.update(s)
    return tuple(sorted(seen))


def max_translocations(m: int) -> int:
    """Largest number of translocations any length-m string can undergo.

    Each translocation consumes two non-empty, non-overlapping adjacent
    factors, i.e. at least two positions of the pattern.
    """
    return m // 2


@dataclass(frozen=True)
class SearchConfig:
    """Search parameters: bound, problem variant and engine selection.

    ``delta`` is the bound on the number of translocations.  ``None`` means
    "use the maximum useful bound", i.e. floor(m/2) for the pattern at hand.
    Variant "a" always ignores ``delta`` (it counts unbounded occurrences).
    """

    delta: int | None = None
    variant: str = "c"
    engine: str = "dawg"

    def __post_init__(self) -> None:
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}; expected one of {VARIANTS}")
        if self.engine not in ENGINES:
            raise ValueError(f"unknown engine {self.engine!r}; expected one of {ENGINES}")
        if self.delta is not None and self.delta < 0:
            raise ValueError("delta must be non-negative")

    def effective_delta(self, m: int) -> int:
        """Bound actually used for a pattern of length m (clamped)."""
        cap = max_translocations(m)
        if self.variant == "a" or self.delta is None:
            return cap
        return min(self.delta, cap)


@dataclass(frozen=True)
class SearchReport:
    """Variant-shaped search result.

    variant "a"/"b": ``count`` holds the number of matching windows.
    variant "c":     ``positions`` holds the sorted 0-based window starts.
    variant "d":     ``cost_sets`` maps each matching window start to the
                     sorted tuple of achievable translocation counts.
    """

    variant: str
    count: int | None = None
    positions: tuple[int, ...] | None = None
    cost_sets: Mapping[int, tuple[int, ...]] | None = None

    def matched_positions(self) -> tuple[int, ...]:
        if self.positions is not None:
            return self.positions
        if self.cost_sets is not None:
            return tuple(sorted(self.cost_sets))
        raise ValueError(f"variant {self.variant!r} reports do not carry positions")


def check_search_inputs(pattern: str, text: str) -> None:
    if not pattern:
        raise ValueError("pattern must be non-empty")
    if len(pattern) > len(text):
        raise ValueError(
            f"pattern length {len(pattern)} exceeds text length {len(text)}"
        )


def report_from_cost_sets(
    variant: str, delta: int, window_costs: list[tuple[int, frozenset[int]]]
) -> SearchReport:
    """Assemble a report from per-window achievable-count sets.

    ``window_costs`` lists (position, counts) pairs in increasing position
    order; ``counts`` may include values above ``delta`` and is filtered here.
    """
    hits: list[tuple[int, tuple[int, ...]]] = []
    for pos, costs in window_costs:
        kept = tuple(sorted(t for t in costs if t <= delta))
        if kept:
            hits.append((pos, kept))
    if variant in ("a", "b"):
        return SearchReport(variant=variant, count=len(hits))
    if variant == "c":
        return SearchReport(variant=variant, positions=tuple(p for p, _ in hits))
    return SearchReport(variant=variant, cost_sets=dict(hits))
