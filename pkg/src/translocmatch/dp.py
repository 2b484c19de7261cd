"""Dynamic-programming search engine.

Two rolling tables drive the scan, both keeping only the last m+1 columns:

* the factor table F, where F[i] at text prefix j is the length of the
  longest common suffix of the pattern prefix of length i and the text
  prefix of length j;
* the cost table Q, whose cell domain depends on the variant: minimum
  translocation count (variants b/c), plain reachability (variant a), or a
  bitset of every achievable count up to the bound (variant d).

A prefix of length i matches the text ending at j either by extending a
match character-for-character, or by ending in a swapped pair of adjacent
factors of lengths h and k; the factor table answers the two "does this
block occur here" questions for the latter case.
"""

from __future__ import annotations

from .core import SearchConfig, SearchReport, check_search_inputs
from .counters import WorkCounters

INF = float("inf")


def next_factor_column(prev: list[int], pattern: str, symbol: str) -> list[int]:
    """Advance the factor table by one text symbol.

    ``prev[i]`` is the longest-common-suffix length for pattern prefix i at
    the previous text prefix; the new column extends every run whose next
    pattern character equals ``symbol`` and zeroes the rest.
    """
    m = len(pattern)
    col = [0] * (m + 1)
    for i in range(1, m + 1):
        if pattern[i - 1] == symbol:
            col[i] = prev[i - 1] + 1
    return col


class FactorTable:
    """Rolling window of the last m+1 factor-table columns.

    Column j (the number of text symbols consumed) is available while no
    more than m further symbols have been fed.  Membership law: position i
    carries an occurrence of the length-k text suffix iff column[i] >= k.
    """

    def __init__(self, pattern: str):
        if not pattern:
            raise ValueError("pattern must be non-empty")
        self.pattern = pattern
        self.m = len(pattern)
        self._width = self.m + 1
        self._cols: list[list[int]] = [[0] * (self.m + 1) for _ in range(self._width)]
        self.j = 0

    def advance(self, symbol: str) -> list[int]:
        prev = self._cols[self.j % self._width]
        self.j += 1
        col = next_factor_column(prev, self.pattern, symbol)
        self._cols[self.j % self._width] = col
        return col

    def column(self, j: int | None = None) -> list[int]:
        if j is None:
            j = self.j
        if not (0 <= j <= self.j and self.j - j <= self.m):
            raise ValueError(f"column {j} is outside the rolling window ending at {self.j}")
        return self._cols[j % self._width]

    def positions_with_suffix(self, k: int, j: int | None = None) -> list[int]:
        """All pattern positions where the length-k suffix of the consumed
        text ends (1-based, as end positions)."""
        col = self.column(j)
        return [i for i in range(1, self.m + 1) if col[i] >= k]


def dp_search(
    pattern: str,
    text: str,
    config: SearchConfig | None = None,
    *,
    counters: WorkCounters | None = None,
) -> SearchReport:
    """Scan the text with the rolling-table dynamic program."""
    cfg = config or SearchConfig()
    check_search_inputs(pattern, text)
    m, n = len(pattern), len(text)
    delta = cfg.effective_delta(m)
    variant = cfg.variant
    width = m + 1

    fcols = [[0] * (m + 1) for _ in range(width)]
    # Q columns; row 0 is the empty-prefix element and never changes.
    if variant == "a":
        zero: object = True
        dead: object = False
    elif variant == "d":
        zero = 1
        dead = 0
    else:
        zero = 0
        dead = INF
    qcols: list[list] = [[dead] * (m + 1) for _ in range(width)]
    for col in qcols:
        col[0] = zero

    cap = (1 << (delta + 1)) - 1
    # every (h, k) pair with h, k >= 1 and h + k <= i, summed over i
    guards_per_column = sum(i * (i - 1) // 2 for i in range(1, m + 1))
    guard_total = 0

    positions: list[int] = []
    cost_sets: dict[int, tuple[int, ...]] = {}
    count = 0

    for j in range(1, n + 1):
        c = text[j - 1]
        cur = j % width
        fj = fcols[cur]
        fprev = fcols[(j - 1) % width]
        for i in range(m, 0, -1):
            fj[i] = fprev[i - 1] + 1 if pattern[i - 1] == c else 0
        qj = qcols[cur]
        qprev = qcols[(j - 1) % width]
        for i in range(1, m + 1):
            qj[i] = dead
        guard_total += guards_per_column

        for i in range(1, m + 1):
            if pattern[i - 1] == c:
                acc = qprev[i - 1]
            else:
                acc = dead
            # swapped trailing factors: lengths h (first block) and k (second);
            # combine from column j-h-k when both blocks occur where required
            for h in range(1, i):
                fh = fcols[(j - h) % width][i]
                kmax = i - h if fh > i - h else fh
                if kmax:
                    qpredcols = qcols
                    for k in range(1, kmax + 1):
                        if fj[i - k] >= h:
                            pred = qpredcols[(j - h - k) % width][i - h - k]
                            if variant == "d":
                                if pred:
                                    acc |= pred << 1
                            elif variant == "a":
                                acc = acc or pred
                            else:
                                if pred + 1 < acc:
                                    acc = pred + 1
            if variant == "d":
                qj[i] = acc & cap
            elif variant == "a":
                qj[i] = acc
            else:
                qj[i] = acc if acc <= delta else INF

        if j >= m:
            final = qj[m]
            if variant == "a":
                if final:
                    count += 1
            elif variant == "d":
                if final:
                    pos = j - m
                    cost_sets[pos] = tuple(t for t in range(delta + 1) if (final >> t) & 1)
            else:
                if final <= delta:
                    positions.append(j - m)

    if counters is not None:
        counters.dp_guard_evals += guard_total
        counters.dp_columns += n

    if variant == "a":
        return SearchReport(variant="a", count=count)
    if variant == "b":
        return SearchReport(variant="b", count=len(positions))
    if variant == "c":
        return SearchReport(variant="c", positions=tuple(positions))
    return SearchReport(variant="d", cost_sets=cost_sets)
