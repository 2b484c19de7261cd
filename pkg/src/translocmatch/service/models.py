"""Pydantic request/response schemas for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class SearchRequest(BaseModel):
    pattern: str = Field(min_length=1)
    text: str
    delta: int | None = Field(default=None, ge=0)
    variant: Literal["a", "b", "c", "d"] = "c"
    engine: Literal["oracle", "dp", "dawg", "align"] = "dawg"
    fasta: bool = False  # treat pattern/text as raw FASTA payloads
    fold_case: bool = False


class MatchEntry(BaseModel):
    position: int
    count: int
    costs: list[int]


class SearchResponse(BaseModel):
    variant: Literal["a", "b", "c", "d"]
    engine: str
    pattern_length: int
    text_length: int
    delta: int
    count: int | None = None
    positions: list[int] | None = None
    matches: list[MatchEntry] | None = None


class BenchAverageRequest(BaseModel):
    engine: Literal["oracle", "dp", "dawg", "align"] = "dawg"
    sigma: int = Field(default=4, ge=1)
    n: int = Field(default=4096, ge=1, le=1 << 20)
    m: int = Field(default=16, ge=1)
    delta: int = Field(default=2, ge=0)
    trials: int = Field(default=5, ge=1, le=100)
    seed: int = 1


class BenchAverageResponse(BaseModel):
    engine: str
    sigma: int
    n: int
    m: int
    delta: int
    trials: int
    mean_work_per_symbol: float
    stdev_work_per_symbol: float


class BudgetSize(BaseModel):
    m: int = Field(ge=1)
    n: int = Field(ge=1)


class BudgetRequest(BaseModel):
    sizes: list[BudgetSize] = Field(default_factory=lambda: [BudgetSize(m=4, n=16)])
    delta_cap: int = Field(default=2, ge=0)
    factor: int = Field(default=8, ge=1)


class BudgetEntryModel(BaseModel):
    engine: str
    m: int
    n: int
    delta: int
    events: int
    budget: int
    frontier_peak: int
    frontier_budget: int
    ok: bool


class BudgetResponse(BaseModel):
    ok: bool
    entries: list[BudgetEntryModel]


class HealthResponse(BaseModel):
    status: Literal["ok"]
    version: str
