"""Alignment-based search engine.

Each text window of pattern length is matched constructively: a frontier of
"translocation attempts" is pushed through the window one character at a
time.  An attempt records the two anchor positions of a factor pair being
recognized out of order (the right factor is consumed first, then the left),
plus the translocation count so far.  When the left factor fails to extend,
border tables of the pattern are used to re-split the pair: a suffix of the
consumed right factor that is also a border of the spanned pattern segment
moves over to the left factor, shifting the boundary without rescanning.

Preprocessing builds three tables over the pattern: the next-position table
(first occurrence of a symbol after a position), the border-length sets of
every substring, and the shortest-border table that drives re-split steps.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import SearchConfig, SearchReport, check_search_inputs, report_from_cost_sets
from .counters import WorkCounters

Attempt = tuple[int, int | None, int | None, int | None, int]


class NextPositionTable:
    """For symbol c and position i (1-based), the smallest j > i with
    x[j] == c, or m+1 when there is none.  Row index runs 0..m so the first
    occurrence of a symbol is ``table[c][0]``."""

    def __init__(self, pattern: str):
        if not pattern:
            raise ValueError("pattern must be non-empty")
        self.pattern = pattern
        self.m = len(pattern)
        rows: dict[str, list[int]] = {}
        for ch in set(pattern):
            row = [self.m + 1] * (self.m + 1)
            nxt = self.m + 1
            for i in range(self.m, -1, -1):
                row[i] = nxt
                if i >= 1 and pattern[i - 1] == ch:
                    nxt = i
            rows[ch] = row
        self._rows = rows

    def next_position(self, symbol: str, i: int) -> int:
        if not (0 <= i <= self.m):
            raise ValueError(f"position {i} outside 0..{self.m}")
        row = self._rows.get(symbol)
        return self.m + 1 if row is None else row[i]

    def row(self, symbol: str) -> list[int] | None:
        return self._rows.get(symbol)


class BorderTables:
    """Border-length sets and shortest borders of every pattern substring.

    A border of x[i..j] here is any length k with 1 <= k <= j-i+1 such that
    the length-k prefix equals the length-k suffix; the full substring counts
    as its own border, the empty string never does.  ``mode="full"`` stores
    all border sets as bitmasks (O(m^3) bits, constant-time queries);
    ``mode="compact"`` stores only the shortest-border table and answers set
    queries by direct slice comparison.
    """

    def __init__(self, pattern: str, mode: str = "full"):
        if not pattern:
            raise ValueError("pattern must be non-empty")
        if mode not in ("full", "compact"):
            raise ValueError(f"unknown border-table mode {mode!r}")
        self.pattern = pattern
        self.m = len(pattern)
        self.mode = mode
        m = self.m
        # rho[i][j] (1-based i <= j): length of the shortest border of x[i..j]
        self._rho: list[list[int]] = [[0] * (m + 1) for _ in range(m + 2)]
        self._psi: list[list[int]] | None = (
            [[0] * (m + 1) for _ in range(m + 2)] if mode == "full" else None
        )
        for i in range(1, m + 1):
            sub = pattern[i - 1 :]
            ln = len(sub)
            pi = [0] * (ln + 1)
            shortest = [0] * (ln + 1)
            border_mask = [0] * (ln + 1)
            k = 0
            for q in range(2, ln + 1):
                while k and sub[k] != sub[q - 1]:
                    k = pi[k]
                if sub[k] == sub[q - 1]:
                    k += 1
                pi[q] = k
            for q in range(1, ln + 1):
                shortest[q] = shortest[pi[q]] if pi[q] else q
                self._rho[i][i + q - 1] = shortest[q]
                if self._psi is not None:
                    border_mask[q] = (1 << q) | border_mask[pi[q]]
                    self._psi[i][i + q - 1] = border_mask[q]

    def shortest_border(self, i: int, j: int) -> int:
        if not (1 <= i <= j <= self.m):
            raise ValueError(f"substring ({i},{j}) outside 1..{self.m}")
        return self._rho[i][j]

    def is_border(self, i: int, j: int, k: int) -> bool:
        """Is k a border length of x[i..j]?"""
        if not (1 <= i <= j <= self.m):
            raise ValueError(f"substring ({i},{j}) outside 1..{self.m}")
        if k < 1 or k > j - i + 1:
            return False
        if self._psi is not None:
            return bool((self._psi[i][j] >> k) & 1)
        if k == j - i + 1:
            return True
        x = self.pattern
        return x[i - 1 : i - 1 + k] == x[j - k : j]

    def border_lengths(self, i: int, j: int) -> tuple[int, ...]:
        if not (1 <= i <= j <= self.m):
            raise ValueError(f"substring ({i},{j}) outside 1..{self.m}")
        if self._psi is not None:
            mask = self._psi[i][j]
            return tuple(k for k in range(1, j - i + 2) if (mask >> k) & 1)
        return tuple(k for k in range(1, j - i + 2) if self.is_border(i, j, k))


@dataclass(frozen=True)
class AlignTables:
    """Preprocessing bundle for one pattern; immutable and shareable."""

    next_pos: NextPositionTable
    borders: BorderTables

    @classmethod
    def build(cls, pattern: str, border_mode: str = "full") -> "AlignTables":
        return cls(NextPositionTable(pattern), BorderTables(pattern, mode=border_mode))


def _check_attempt(pattern: str, window: str, i: int, attempt: Attempt, delta: int) -> None:
    """Debug invariants, enforced on every frontier insertion.

    The frontier index equals the consumed span; a recognized right factor
    and the left-factor progress must literally match their text slices.
    """
    s1, k1, s2, k2, t = attempt
    k1v = k1 or 0
    k2v = k2 or 0
    assert i == s1 + k1v + k2v, f"span law broken at i={i}: {attempt}"
    assert t <= delta, f"unpruned attempt cost at i={i}: {attempt}"
    if s2 is not None:
        assert pattern[s2 : s2 + k2v] == window[s1 : s1 + k2v], (
            f"right factor mismatch at i={i}: {attempt}"
        )
        if k1v:
            assert pattern[s1 : s1 + k1v] == window[s1 + k2v : s1 + k2v + k1v], (
                f"left factor mismatch at i={i}: {attempt}"
            )


def align_window(
    pattern: str,
    window: str,
    delta: int,
    tables: AlignTables | None = None,
    *,
    counters: WorkCounters | None = None,
    debug: bool = False,
) -> frozenset[int]:
    """Achievable translocation counts (up to ``delta``) turning the pattern
    into the window.

    Detection and the minimum count agree with the brute-force reference;
    counts above the minimum may be underreported because redundant factor
    rearrangements are skipped (they would rediscover matches already
    represented on the frontier).
    """
    m = len(pattern)
    if len(window) != m:
        raise ValueError("window length must equal pattern length")
    if delta < 0:
        raise ValueError("delta must be non-negative")
    tb = tables if tables is not None else AlignTables.build(pattern)
    mu_rows = tb.next_pos._rows
    borders = tb.borders

    frontier: set[Attempt] = {(0, None, None, None, 0)}
    frontier_sum = 1
    processed = 0
    openings = 0
    resplit_steps = 0

    for i in range(1, m + 1):
        c = window[i - 1]
        nxt: set[Attempt] = set()
        row = mu_rows.get(c)
        for attempt in frontier:
            processed += 1
            s1, k1, s2, k2, t = attempt
            if k2 is None:
                # no translocation in progress; s1 == i-1
                if pattern[i - 1] == c:
                    nxt.add((i, None, None, None, t))
                if t < delta and row is not None:
                    r = row[i]
                    while r <= m:
                        # open a pair: right factor starts at r, left spans s1+1..r-1
                        nxt.add((i - 1, None, r - 1, 1, t + 1))
                        openings += 1
                        r = row[r]
                continue
            if k1 is None:
                end = s2 + k2
                if end < m and pattern[end] == c:
                    nxt.add((s1, None, s2, k2 + 1, t))
                    continue
                k1 = 0  # right factor finished; start recognizing the left one
            # left-factor phase
            if pattern[s1 + k1] == c:
                nk1 = k1 + 1
                if s1 + nk1 == s2:
                    nxt.add((i, None, None, None, t))
                else:
                    nxt.add((s1, nk1, s2, k2, t))
                continue
            # re-split: move a border-compatible suffix of the right factor
            # over to the left factor, then retry the extension
            span_end = s2 + k2
            b = 0
            while True:
                resplit_steps += 1
                b += borders.shortest_border(s1 + 1, span_end - b)
                if b >= k2 or s1 + k1 + b >= s2:
                    break  # transferred suffix must stay proper and not overflow
                if not borders.is_border(s1 + 1, span_end, b):
                    continue
                if k1 and not borders.is_border(s1 + 1, s1 + k1 + b, k1):
                    continue
                if pattern[s1 + k1 + b] == c:
                    nk1 = k1 + b + 1
                    if s1 + nk1 == s2:
                        nxt.add((i, None, None, None, t))
                    else:
                        nxt.add((s1, nk1, s2, k2 - b, t))
                    break
        if debug:
            for attempt in nxt:
                _check_attempt(pattern, window, i, attempt, delta)
        frontier = nxt
        frontier_sum += len(nxt)

    if counters is not None:
        counters.align_attempts += processed
        counters.align_openings += openings
        counters.align_resplit_steps += resplit_steps
        if frontier_sum > counters.align_frontier_peak:
            counters.align_frontier_peak = frontier_sum

    return frozenset(t for (s1, k1, s2, k2, t) in frontier if k2 is None and s1 == m)


def align_search(
    pattern: str,
    text: str,
    config: SearchConfig | None = None,
    *,
    counters: WorkCounters | None = None,
    tables: AlignTables | None = None,
    debug: bool = False,
) -> SearchReport:
    """Run the window alignment over every window start."""
    cfg = config or SearchConfig()
    check_search_inputs(pattern, text)
    m = len(pattern)
    delta = cfg.effective_delta(m)
    tb = tables if tables is not None else AlignTables.build(pattern)
    window_costs: list[tuple[int, frozenset[int]]] = []
    for pos in range(len(text) - m + 1):
        costs = align_window(
            pattern, text[pos : pos + m], delta, tb, counters=counters, debug=debug
        )
        window_costs.append((pos, costs))
    return report_from_cost_sets(cfg.variant, delta, window_costs)
