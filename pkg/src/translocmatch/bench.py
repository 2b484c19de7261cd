"""Instrumented measurements: random corpora, work counters, budget checks.

Random inputs come from a splitmix64 generator (Steele, Lea & Flood's 64-bit
mixer), chosen because it is tiny, documented, and byte-stable across
platforms and languages; identical seeds always reproduce identical corpora
and therefore identical counters.
"""

from __future__ import annotations

import csv
import statistics
from dataclasses import dataclass, field
from typing import IO, Iterable, Sequence

from .core import SearchConfig
from .counters import WorkCounters
from .engines import ENGINES

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15

# documented budget constant: every engine's event total on a search stays
# below BUDGET_FACTOR * n * m^3 (adversarial inputs included)
BUDGET_FACTOR = 8


class SplitMix64:
    """splitmix64: state += golden gamma; output = mixed state."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)


def alphabet_for(sigma: int) -> str:
    if sigma < 1:
        raise ValueError("alphabet size must be positive")
    letters = "acgt" + "".join(ch for ch in "bdefhijklmnopqrsuvwxyz")
    if sigma > len(letters):
        raise ValueError(f"alphabet size {sigma} not supported (max {len(letters)})")
    return letters[:sigma]


def random_string(rng: SplitMix64, length: int, sigma: int) -> str:
    alpha = alphabet_for(sigma)
    return "".join(alpha[rng.next_u64() % sigma] for _ in range(length))


@dataclass(frozen=True)
class RandomTextSpec:
    """Reproducible corpus description for one measurement series."""

    sigma: int
    n: int
    m: int
    delta: int
    seed: int
    trials: int = 1

    def __post_init__(self) -> None:
        if self.sigma < 1 or self.n < 1 or self.m < 1 or self.m > self.n:
            raise ValueError("need sigma >= 1 and 1 <= m <= n")
        if self.delta < 0 or self.trials < 1:
            raise ValueError("delta and trials must be non-negative/positive")

    def instances(self) -> Iterable[tuple[int, str, str]]:
        """Yield (trial, pattern, text); streams are seed-determined."""
        seeder = SplitMix64(self.seed)
        for trial in range(self.trials):
            pattern = random_string(SplitMix64(seeder.next_u64()), self.m, self.sigma)
            text = random_string(SplitMix64(seeder.next_u64()), self.n, self.sigma)
            yield trial, pattern, text


@dataclass
class TrialRow:
    engine: str
    sigma: int
    n: int
    m: int
    delta: int
    trial: int
    counters: dict[str, int]

    @property
    def events(self) -> int:
        return sum(v for k, v in self.counters.items() if k != "align_frontier_peak")

    @property
    def work_per_symbol(self) -> float:
        return self.events / self.n


@dataclass
class MeasureResult:
    spec: RandomTextSpec
    engine: str
    rows: list[TrialRow] = field(default_factory=list)

    @property
    def mean_work_per_symbol(self) -> float:
        return statistics.fmean(r.work_per_symbol for r in self.rows)

    @property
    def stdev_work_per_symbol(self) -> float:
        if len(self.rows) < 2:
            return 0.0
        return statistics.stdev(r.work_per_symbol for r in self.rows)


def measure_average_work(
    spec: RandomTextSpec, engine: str = "dawg", variant: str = "c"
) -> MeasureResult:
    """Mean instrumented work per text symbol over seeded random trials."""
    fn = ENGINES[engine]
    cfg = SearchConfig(delta=spec.delta, variant=variant)
    result = MeasureResult(spec=spec, engine=engine)
    for trial, pattern, text in spec.instances():
        counters = WorkCounters()
        fn(pattern, text, cfg, counters=counters)
        result.rows.append(
            TrialRow(engine, spec.sigma, spec.n, spec.m, spec.delta, trial, counters.as_dict())
        )
    return result


@dataclass
class BudgetEntry:
    engine: str
    m: int
    n: int
    delta: int
    events: int
    budget: int
    frontier_peak: int
    frontier_budget: int

    @property
    def ok(self) -> bool:
        return self.events <= self.budget and self.frontier_peak <= self.frontier_budget

    def describe(self) -> str:
        status = "ok" if self.ok else "EXCEEDED"
        return (
            f"{self.engine}: m={self.m} n={self.n} delta={self.delta} "
            f"events={self.events} budget={self.budget} "
            f"frontier={self.frontier_peak}/{self.frontier_budget} [{status}]"
        )


@dataclass
class BudgetReport:
    factor: int
    entries: list[BudgetEntry] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def failures(self) -> list[BudgetEntry]:
        return [e for e in self.entries if not e.ok]


def unary_corpus(sizes: Sequence[tuple[int, int]], max_delta: int = 2) -> list[tuple[str, str, int]]:
    """Adversarial all-equal-symbol inputs: every window matches every way."""
    return [("a" * m, "a" * n, min(max_delta, m // 2)) for m, n in sizes]


DEFAULT_BUDGET_SIZES: tuple[tuple[int, int], ...] = ((2, 8), (4, 16), (8, 32))


def assert_worst_case_budgets(
    corpus: Sequence[tuple[str, str, int]] | None = None,
    *,
    factor: int = BUDGET_FACTOR,
    engines: Sequence[str] = ("oracle", "dp", "dawg", "align"),
    variant: str = "c",
) -> BudgetReport:
    """Check every engine's event totals against factor * n * m^3, and the
    alignment engine's per-window frontier mass against m^3 exactly.

    Returns a report; entries that exceed a budget are marked rather than
    raised so callers can render the failing engine and input.
    """
    if corpus is None:
        corpus = unary_corpus(DEFAULT_BUDGET_SIZES)
    report = BudgetReport(factor=factor)
    for pattern, text, delta in corpus:
        m, n = len(pattern), len(text)
        cfg = SearchConfig(delta=delta, variant=variant)
        for engine in engines:
            counters = WorkCounters()
            ENGINES[engine](pattern, text, cfg, counters=counters)
            report.entries.append(
                BudgetEntry(
                    engine=engine,
                    m=m,
                    n=n,
                    delta=delta,
                    events=counters.total(),
                    budget=factor * n * m**3,
                    # cubic once translocations exist; a length-1 pattern only
                    # ever carries one closed attempt per frontier
                    frontier_budget=max(m**3, m + 1),
                    frontier_peak=counters.align_frontier_peak,
                )
            )
    return report


CSV_COLUMNS = ("engine", "sigma", "n", "m", "delta", "trial", "counter_name", "value")


def write_counter_csv(stream: IO[str], rows: Iterable[TrialRow]) -> None:
    """One line per (trial, counter) pair, stable column order."""
    writer = csv.writer(stream)
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        for name, value in row.counters.items():
            writer.writerow(
                [row.engine, row.sigma, row.n, row.m, row.delta, row.trial, name, value]
            )
