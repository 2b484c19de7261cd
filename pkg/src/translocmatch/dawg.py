"""Suffix-automaton (DAWG) search engine.

The automaton of the pattern accepts exactly its factors; states are classes
of factors sharing the same set of end positions.  Scanning the text keeps a
(state, length) pair describing the longest pattern factor that ends at the
current text position.  From that pair, walking suffix links answers "where
does this text suffix occur in the pattern" queries without ever storing the
factor table explicitly, which is what makes the scan cheap on average.
"""

from __future__ import annotations

from bisect import bisect_left

from .core import SearchConfig, SearchReport, check_search_inputs
from .counters import WorkCounters

INF = float("inf")


class Dawg:
    """Deterministic acyclic word graph of a pattern.

    States are ints; 0 is the root.  Every state is accepting.  Suffix link
    of the root is -1.  End-position sets are 1-based pattern positions and
    can be kept either as per-state bitmasks (constant-time membership) or
    as sorted tuples (binary-search membership), chosen at build time.
    """

    def __init__(self, pattern: str, endpos_mode: str = "bitset"):
        if not pattern:
            raise ValueError("pattern must be non-empty")
        if endpos_mode not in ("bitset", "sorted"):
            raise ValueError(f"unknown endpos_mode {endpos_mode!r}")
        self.pattern = pattern
        self.m = len(pattern)
        self.endpos_mode = endpos_mode
        self.transitions: list[dict[str, int]] = [{}]
        self.link: list[int] = [-1]
        self.length: list[int] = [0]
        self._build()
        self._materialize_endpos()

    # -- construction -----------------------------------------------------

    def _build(self) -> None:
        trans, link, length = self.transitions, self.link, self.length
        primary: list[int] = [0]  # 1-based end position for prefix states, 0 for clones
        last = 0
        for pos, ch in enumerate(self.pattern, start=1):
            cur = len(trans)
            trans.append({})
            link.append(-1)
            length.append(length[last] + 1)
            primary.append(pos)
            p = last
            while p != -1 and ch not in trans[p]:
                trans[p][ch] = cur
                p = link[p]
            if p == -1:
                link[cur] = 0
            else:
                q = trans[p][ch]
                if length[q] == length[p] + 1:
                    link[cur] = q
                else:
                    clone = len(trans)
                    trans.append(dict(trans[q]))
                    link.append(link[q])
                    length.append(length[p] + 1)
                    primary.append(0)
                    while p != -1 and trans[p].get(ch) == q:
                        trans[p][ch] = clone
                        p = link[p]
                    link[q] = clone
                    link[cur] = clone
            last = cur
        self._primary = primary

    def _materialize_endpos(self) -> None:
        # union along the suffix-link tree, deepest states first
        masks = [0] * len(self.length)
        for state, pos in enumerate(self._primary):
            if pos:
                masks[state] = 1 << pos
        for state in sorted(range(1, len(self.length)), key=self.length.__getitem__, reverse=True):
            masks[self.link[state]] |= masks[state]
        masks[0] |= 1  # the empty factor also ends at position 0
        if self.endpos_mode == "bitset":
            self._endpos_masks: list[int] | None = masks
            self._endpos_sorted: list[tuple[int, ...]] | None = None
        else:
            self._endpos_masks = None
            self._endpos_sorted = [_mask_to_tuple(mask) for mask in masks]

    # -- queries -----------------------------------------------------------

    @property
    def state_count(self) -> int:
        return len(self.length)

    @property
    def transition_count(self) -> int:
        return sum(len(t) for t in self.transitions)

    def state_for(self, factor: str) -> int | None:
        """State reached from the root on ``factor``; None if not a factor."""
        q = 0
        for ch in factor:
            nxt = self.transitions[q].get(ch)
            if nxt is None:
                return None
            q = nxt
        return q

    def accepts(self, word: str) -> bool:
        return self.state_for(word) is not None

    def endpos(self, state: int) -> tuple[int, ...]:
        if self._endpos_masks is not None:
            return _mask_to_tuple(self._endpos_masks[state])
        assert self._endpos_sorted is not None
        return self._endpos_sorted[state]

    def endpos_contains(self, state: int, pos: int) -> bool:
        if self._endpos_masks is not None:
            return bool((self._endpos_masks[state] >> pos) & 1) if pos >= 0 else False
        assert self._endpos_sorted is not None
        arr = self._endpos_sorted[state]
        idx = bisect_left(arr, pos)
        return idx < len(arr) and arr[idx] == pos

    def longest_value(self, state: int) -> str:
        """Longest factor in the state's class."""
        if state == 0:
            return ""
        end = self.endpos(state)[0]
        return self.pattern[end - self.length[state] : end]

    def dump(self) -> str:
        """Plain-text adjacency listing, one state per line, for fixture diffs."""
        lines = []
        for q in range(self.state_count):
            edges = " ".join(f"{ch}->{t}" for ch, t in sorted(self.transitions[q].items()))
            ep = ",".join(str(p) for p in self.endpos(q))
            lines.append(f"state {q} len={self.length[q]} suf={self.link[q]} endpos=[{ep}] trans: {edges}")
        return "\n".join(lines)


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    pos = 0
    while mask:
        if mask & 1:
            out.append(pos)
        mask >>= 1
        pos += 1
    return tuple(out)


def build_dawg(pattern: str, endpos_mode: str = "bitset") -> Dawg:
    return Dawg(pattern, endpos_mode=endpos_mode)


def dawg_delta(
    dawg: Dawg, state: int, length: int, symbol: str, counters: WorkCounters | None = None
) -> tuple[int, int]:
    """Advance a (state, matched-length) scan configuration by one symbol.

    Walks suffix links from ``state`` until a transition on ``symbol``
    exists; returns (root, 0) when no factor suffix can be extended.
    """
    trans = dawg.transitions
    nxt = trans[state].get(symbol)
    if nxt is not None:
        return nxt, length + 1
    link = dawg.link
    hops = 0
    q = link[state]
    while q != -1 and symbol not in trans[q]:
        q = link[q]
        hops += 1
    hops += 1
    if counters is not None:
        counters.dawg_link_hops += hops
    if q == -1:
        return 0, 0
    return trans[q][symbol], dawg.length[q] + 1


def phi(dawg: Dawg, state: int, k: int) -> int:
    """Class containing the length-k suffix of the state's longest factor.

    First node on the suffix path whose link points below length k.
    """
    if not (1 <= k <= dawg.length[state]):
        raise ValueError(
            f"k={k} outside (0, len={dawg.length[state]}] for state {state}"
        )
    link, length = dawg.link, dawg.length
    q = state
    while True:
        up = link[q]
        if up == -1 or length[up] < k:
            return q
        q = up


def dawg_search(
    pattern: str,
    text: str,
    config: SearchConfig | None = None,
    *,
    counters: WorkCounters | None = None,
    dawg: Dawg | None = None,
) -> SearchReport:
    """Automaton-driven scan.

    Per text position the engine keeps the last m+1 scan configurations and
    live prefix sets; factor-occurrence queries for the swapped-block case
    are answered by end-position membership on suffix-link walks, descending
    block lengths so each walk advances one link at a time.
    """
    cfg = config or SearchConfig()
    check_search_inputs(pattern, text)
    m, n = len(pattern), len(text)
    delta = cfg.effective_delta(m)
    variant = cfg.variant
    A = dawg if dawg is not None else Dawg(pattern)
    width = m + 1

    if variant == "a":
        zero: object = True
        dead: object = False
    elif variant == "d":
        zero = 1
        dead = 0
    else:
        zero = 0
        dead = INF
    cap = (1 << (delta + 1)) - 1

    qrings: list[list] = [[dead] * (m + 1) for _ in range(width)]
    for col in qrings:
        col[0] = zero
    prings: list[list[int]] = [[0] for _ in range(width)]
    inp_rings = [bytearray(m + 1) for _ in range(width)]
    for flags in inp_rings:
        flags[0] = 1
    cfg_ring: list[tuple[int, int]] = [(0, 0)] * width

    trans = A.transitions
    linkv = A.link
    lenv = A.length
    masks = A._endpos_masks
    sorted_sets = A._endpos_sorted

    hops = 0
    loop_steps = 0
    visits = 0
    tests = 0

    positions: list[int] = []
    cost_sets: dict[int, tuple[int, ...]] = {}
    count = 0

    state, l = 0, 0
    for j in range(1, n + 1):
        c = text[j - 1]
        # advance the configuration (inline of dawg_delta, hop-counted)
        nxt = trans[state].get(c)
        if nxt is not None:
            state, l = nxt, l + 1
        else:
            q = linkv[state]
            while q != -1 and c not in trans[q]:
                q = linkv[q]
                hops += 1
            hops += 1
            if q == -1:
                state, l = 0, 0
            else:
                state, l = trans[q][c], lenv[q] + 1
        cur = j % width
        cfg_ring[cur] = (state, l)

        pcur = prings[cur]
        qcur = qrings[cur]
        inp = inp_rings[cur]
        for i in pcur:
            if i:
                qcur[i] = dead
                inp[i] = 0
        del pcur[1:]

        # case (i): extend every live prefix by a matching character
        pprev = prings[(j - 1) % width]
        qprev = qrings[(j - 1) % width]
        for i in pprev:
            visits += 1
            if i < m and pattern[i] == c:
                ni = i + 1
                v = qprev[i]
                if variant == "d":
                    qcur[ni] |= v
                elif variant == "a":
                    qcur[ni] = True
                else:
                    if v < qcur[ni]:
                        qcur[ni] = v
                if not inp[ni]:
                    inp[ni] = 1
                    pcur.append(ni)

        # case (ii): swapped trailing factors of lengths h and k
        if l:
            u = state
            for h in range(l, 0, -1):
                while True:
                    up = linkv[u]
                    if up == -1 or lenv[up] < h:
                        break
                    u = up
                    hops += 1
                loop_steps += 1
                qh, lh = cfg_ring[(j - h) % width]
                kmax = m - h
                if lh < kmax:
                    kmax = lh
                if kmax <= 0:
                    continue
                p = qh
                epu = masks[u] if masks is not None else None
                for k in range(kmax, 0, -1):
                    while True:
                        up = linkv[p]
                        if up == -1 or lenv[up] < k:
                            break
                        p = up
                        hops += 1
                    loop_steps += 1
                    pred_idx = (j - h - k) % width
                    ppred = prings[pred_idx]
                    qpred = qrings[pred_idx]
                    lim = m - h - k
                    hk = h + k
                    epp = masks[p] if masks is not None else None
                    for i in ppred:
                        if i > lim:
                            break
                        visits += 1
                        tests += 1
                        if epu is not None:
                            ok = (epu >> (i + h)) & 1
                        else:
                            ok = A.endpos_contains(u, i + h)
                        if not ok:
                            continue
                        tests += 1
                        if epp is not None:
                            ok = (epp >> (i + hk)) & 1
                        else:
                            ok = A.endpos_contains(p, i + hk)
                        if not ok:
                            continue
                        tgt = i + hk
                        if variant == "d":
                            nv = (qpred[i] << 1) & cap
                            if nv:
                                qcur[tgt] |= nv
                                if not inp[tgt]:
                                    inp[tgt] = 1
                                    pcur.append(tgt)
                        elif variant == "a":
                            qcur[tgt] = True
                            if not inp[tgt]:
                                inp[tgt] = 1
                                pcur.append(tgt)
                        else:
                            cand = qpred[i] + 1
                            if cand <= delta:
                                if cand < qcur[tgt]:
                                    qcur[tgt] = cand
                                if not inp[tgt]:
                                    inp[tgt] = 1
                                    pcur.append(tgt)

        pcur.sort()
        if j >= m:
            final = qcur[m]
            if variant == "a":
                if final:
                    count += 1
            elif variant == "d":
                if final:
                    cost_sets[j - m] = tuple(t for t in range(delta + 1) if (final >> t) & 1)
            else:
                if final <= delta:
                    positions.append(j - m)

    if counters is not None:
        counters.dawg_link_hops += hops
        counters.dawg_loop_steps += loop_steps
        counters.dawg_prefix_visits += visits
        counters.dawg_endpos_tests += tests

    if variant == "a":
        return SearchReport(variant="a", count=count)
    if variant == "b":
        return SearchReport(variant="b", count=len(positions))
    if variant == "c":
        return SearchReport(variant="c", positions=tuple(positions))
    return SearchReport(variant="d", cost_sets=cost_sets)
