"""Request/response models of the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class HealthResponse(BaseModel):
    status: str
    version: str


InvariantName = Literal["gamma", "delta", "Theta", "theta", "jones", "homflypt"]
RouteName = Literal["trace", "skein", "comb", "all"]


class InvariantRequest(BaseModel):
    braid: list[int] = Field(default_factory=list)
    strands: int = Field(ge=1)
    invariant: InvariantName
    d: Optional[int] = Field(default=None, ge=1)
    D: Optional[list[int]] = None
    route: RouteName = "trace"
    E: Optional[str] = None
    framings: Optional[list[int]] = None
    specialized: bool = True


class RouteValue(BaseModel):
    route: str
    value: str


class InvariantResponse(BaseModel):
    invariant: str
    routes: list[RouteValue]
    agree: Optional[bool] = None


class TablesRequest(BaseModel):
    table: Literal["dims", "esystem", "irreps"]
    d: int = Field(ge=1)
    n: int = Field(default=3, ge=1)


class TablesResponse(BaseModel):
    headers: list[str]
    rows: list[list[str]]


class PairsRequest(BaseModel):
    catalog_text: str
    pairs_text: str


class PairResult(BaseModel):
    first: str
    second: str
    difference: str
    reference: Optional[str] = None
    match: Optional[bool] = None


class PairsResponse(BaseModel):
    results: list[PairResult]


class ErrorDetail(BaseModel):
    code: Literal["usage", "computation"]
    message: str
