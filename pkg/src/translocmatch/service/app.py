"""FastAPI service wrapping the search library.

Useful when one pattern (or a stream of requests) is served to several
clients: the service keeps the process warm so repeated searches skip
interpreter start-up, and the CLI can delegate to it with ``--server``.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..bench import RandomTextSpec, assert_worst_case_budgets, measure_average_work, unary_corpus
from ..core import SearchConfig
from ..engines import search
from ..textio import normalize_fasta
from .models import (
    BenchAverageRequest,
    BenchAverageResponse,
    BudgetEntryModel,
    BudgetRequest,
    BudgetResponse,
    HealthResponse,
    MatchEntry,
    SearchRequest,
    SearchResponse,
)

app = FastAPI(title="translocmatch", version=__version__)


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/search", response_model=SearchResponse, response_model_exclude_none=True)
def run_search(request: SearchRequest) -> SearchResponse:
    pattern, text = request.pattern, request.text
    try:
        if request.fasta:
            pattern = normalize_fasta(pattern, "<pattern>")
            text = normalize_fasta(text, "<text>")
        if request.fold_case:
            pattern, text = pattern.upper(), text.upper()
        config = SearchConfig(
            delta=request.delta, variant=request.variant, engine=request.engine
        )
        report = search(pattern, text, config)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    response = SearchResponse(
        variant=report.variant,
        engine=request.engine,
        pattern_length=len(pattern),
        text_length=len(text),
        delta=config.effective_delta(len(pattern)),
        count=report.count,
        positions=list(report.positions) if report.positions is not None else None,
        matches=(
            [
                MatchEntry(position=pos, count=len(costs), costs=list(costs))
                for pos, costs in sorted(report.cost_sets.items())
            ]
            if report.cost_sets is not None
            else None
        ),
    )
    return response


@app.post("/bench/average", response_model=BenchAverageResponse)
def bench_average(request: BenchAverageRequest) -> BenchAverageResponse:
    try:
        spec = RandomTextSpec(
            sigma=request.sigma,
            n=request.n,
            m=request.m,
            delta=min(request.delta, request.m // 2),
            seed=request.seed,
            trials=request.trials,
        )
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    result = measure_average_work(spec, engine=request.engine)
    return BenchAverageResponse(
        engine=request.engine,
        sigma=spec.sigma,
        n=spec.n,
        m=spec.m,
        delta=spec.delta,
        trials=spec.trials,
        mean_work_per_symbol=result.mean_work_per_symbol,
        stdev_work_per_symbol=result.stdev_work_per_symbol,
    )


@app.post("/bench/budgets", response_model=BudgetResponse)
def bench_budgets(request: BudgetRequest) -> BudgetResponse:
    corpus = unary_corpus(
        [(s.m, s.n) for s in request.sizes], max_delta=request.delta_cap
    )
    report = assert_worst_case_budgets(corpus, factor=request.factor)
    return BudgetResponse(
        ok=report.ok,
        entries=[
            BudgetEntryModel(
                engine=e.engine,
                m=e.m,
                n=e.n,
                delta=e.delta,
                events=e.events,
                budget=e.budget,
                frontier_peak=e.frontier_peak,
                frontier_budget=e.frontier_budget,
                ok=e.ok,
            )
            for e in report.entries
        ],
    )
