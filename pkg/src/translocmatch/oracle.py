"""Brute-force reference for translocation matching.

These routines define ground truth for the real engines.  They recurse
directly over the structure of a transformation: a string either keeps its
last character, or ends in a swapped pair of adjacent factors.  Everything
is checked by literal slice comparison, so there is nothing shared with the
table-based engines that could fail in a correlated way.
"""

from __future__ import annotations

from .core import SearchConfig, SearchReport, check_search_inputs, report_from_cost_sets
from .counters import WorkCounters

IMAGE_LENGTH_LIMIT = 12


def cost_set(
    x: str,
    z: str,
    delta: int,
    *,
    memo: bool = True,
    counters: WorkCounters | None = None,
) -> frozenset[int]:
    """All t <= delta such that x becomes z via t non-overlapping
    translocations of adjacent factors.

    Empty result means z is not reachable within the bound.  A position of x
    takes part in at most one translocation, which the recursion enforces by
    consuming a trailing swapped block atomically.
    """
    if len(x) != len(z):
        raise ValueError("cost_set requires equal-length strings")
    if delta < 0:
        raise ValueError("delta must be non-negative")
    m = len(x)
    cap = (1 << (delta + 1)) - 1
    table: dict[int, int] | None = {} if memo else None
    checks = 0

    def solve(i: int) -> int:
        nonlocal checks
        if i == 0:
            return 1
        if table is not None:
            got = table.get(i)
            if got is not None:
                return got
        acc = 0
        if x[i - 1] == z[i - 1]:
            acc = solve(i - 1)
        # trailing block: pattern ...zb wb  ->  target ...wb zb
        for k in range(1, i):
            wb = x[i - k : i]
            for h in range(1, i - k + 1):
                checks += 1
                if z[i - h : i] == x[i - h - k : i - k] and z[i - h - k : i - h] == wb:
                    acc |= solve(i - h - k) << 1
        acc &= cap
        if table is not None:
            table[i] = acc
        return acc

    mask = solve(m)
    if counters is not None:
        counters.oracle_block_checks += checks
    return frozenset(t for t in range(delta + 1) if (mask >> t) & 1)


def enumerate_images(x: str, delta: int) -> frozenset[str]:
    """Every string reachable from x with at most ``delta`` translocations.

    Generated by enumerating decompositions directly: from each position the
    string either copies one character or emits a swapped adjacent-factor
    pair.  Guarded to short strings; the image count grows exponentially.
    """
    if delta < 0:
        raise ValueError("delta must be non-negative")
    m = len(x)
    if m > IMAGE_LENGTH_LIMIT:
        raise ValueError(
            f"enumerate_images is limited to |x| <= {IMAGE_LENGTH_LIMIT} (got {m})"
        )
    table: dict[tuple[int, int], frozenset[str]] = {}

    def gen(p: int, budget: int) -> frozenset[str]:
        if p == m:
            return frozenset(("",))
        key = (p, budget)
        got = table.get(key)
        if got is not None:
            return got
        out = {x[p] + tail for tail in gen(p + 1, budget)}
        if budget > 0:
            for h in range(1, m - p):
                for k in range(1, m - p - h + 1):
                    block = x[p + h : p + h + k] + x[p : p + h]
                    for tail in gen(p + h + k, budget - 1):
                        out.add(block + tail)
        result = frozenset(out)
        table[key] = result
        return result

    return gen(0, delta)


def oracle_search(
    pattern: str,
    text: str,
    config: SearchConfig | None = None,
    *,
    counters: WorkCounters | None = None,
) -> SearchReport:
    """Window-by-window application of :func:`cost_set`.

    This is the ground-truth engine: correct by construction, cubic-ish per
    window, only suitable as a reference.  Identical windows are evaluated
    once per call.
    """
    cfg = config or SearchConfig()
    check_search_inputs(pattern, text)
    m = len(pattern)
    delta = cfg.effective_delta(m)
    cache: dict[str, frozenset[int]] = {}
    window_costs: list[tuple[int, frozenset[int]]] = []
    for pos in range(len(text) - m + 1):
        window = text[pos : pos + m]
        costs = cache.get(window)
        if costs is None:
            costs = cost_set(pattern, window, delta, counters=counters)
            cache[window] = costs
        window_costs.append((pos, costs))
    return report_from_cost_sets(cfg.variant, delta, window_costs)
