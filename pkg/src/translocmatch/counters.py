"""Work counters shared by all search engines.

Counters tally algorithmic events (loop steps, guard decisions, membership
tests), never wall time.  Engines accept an optional counter object and add
to it at the end of a run, so an uninstrumented search pays almost nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, fields


@dataclass
class WorkCounters:
    # dynamic-programming engine
    dp_guard_evals: int = 0          # (h, k) guard decisions of the inner double loop
    dp_columns: int = 0
    # automaton engine
    dawg_link_hops: int = 0          # suffix-link traversals (delta walk + descending walks)
    dawg_endpos_tests: int = 0       # end-position membership queries
    dawg_prefix_visits: int = 0      # iterations over live prefix sets
    dawg_loop_steps: int = 0         # iterations of the nested factor-length loops
    # alignment engine
    align_attempts: int = 0          # translocation attempts processed
    align_openings: int = 0          # attempts opened from a closed state
    align_resplit_steps: int = 0     # border-chain steps while re-splitting factors
    align_frontier_peak: int = 0     # max per-window sum of frontier sizes
    # brute-force oracle
    oracle_block_checks: int = 0     # trailing-block comparisons actually evaluated

    def reset(self) -> None:
        for f in fields(self):
            setattr(self, f.name, 0)

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def total(self) -> int:
        """Sum of all cumulative event counts (the frontier peak is a
        high-water mark, not an event count, and is excluded)."""
        return sum(v for k, v in self.as_dict().items() if k != "align_frontier_peak")
