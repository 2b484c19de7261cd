"""Approximate string matching under non-overlapping translocations of
adjacent, possibly different-length factors."""

__version__ = "0.1.0"

from .align import AlignTables, BorderTables, NextPositionTable, align_search, align_window
from .core import SearchConfig, SearchReport, alphabet_of, max_translocations
from .counters import WorkCounters
from .dawg import Dawg, build_dawg, dawg_delta, dawg_search, phi
from .dp import FactorTable, dp_search, next_factor_column
from .engines import ENGINES, search
from .oracle import cost_set, enumerate_images, oracle_search

__all__ = [
    "__version__",
    "AlignTables",
    "BorderTables",
    "Dawg",
    "ENGINES",
    "FactorTable",
    "NextPositionTable",
    "SearchConfig",
    "SearchReport",
    "WorkCounters",
    "align_search",
    "align_window",
    "alphabet_of",
    "build_dawg",
    "cost_set",
    "dawg_delta",
    "dawg_search",
    "dp_search",
    "enumerate_images",
    "max_translocations",
    "next_factor_column",
    "oracle_search",
    "phi",
    "search",
]
