"""Engine registry and search facade."""

from __future__ import annotations

from typing import Callable, Protocol

from .align import align_search
from .core import SearchConfig, SearchReport
from .counters import WorkCounters
from .dawg import dawg_search
from .dp import dp_search
from .oracle import oracle_search


class SearchFn(Protocol):
    def __call__(
        self,
        pattern: str,
        text: str,
        config: SearchConfig | None = None,
        *,
        counters: WorkCounters | None = None,
    ) -> SearchReport: ...


ENGINES: dict[str, SearchFn] = {
    "oracle": oracle_search,
    "dp": dp_search,
    "dawg": dawg_search,
    "align": align_search,
}


def search(
    pattern: str,
    text: str,
    config: SearchConfig | None = None,
    *,
    counters: WorkCounters | None = None,
) -> SearchReport:
    """Run the engine selected by ``config.engine``."""
    cfg = config or SearchConfig()
    return ENGINES[cfg.engine](pattern, text, cfg, counters=counters)
