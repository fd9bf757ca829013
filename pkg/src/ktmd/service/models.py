"""Request and response shapes for the HTTP service."""

from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, Field


class GraphPayload(BaseModel):
    n: int = Field(ge=1)
    edges: List[Tuple[int, int]] = Field(default_factory=list)


class Stats(BaseModel):
    nodes: int = 0
    elapsed: float = 0.0


class DimensionRequest(BaseModel):
    graph: GraphPayload
    k: int = 1
    t: Optional[int] = None  # None: use the diameter; needs a connected graph
    solver: Literal["exact", "greedy", "brute"] = "exact"
    budget: Optional[int] = None
    threads: Optional[int] = None


class DimensionResponse(BaseModel):
    n: int
    t: Optional[int]
    k: Optional[int]
    status: str
    dimension: Optional[int]
    basis: Optional[List[int]]
    stats: Stats


class DimensionalRequest(BaseModel):
    graph: GraphPayload
    t: Optional[int] = None


class ProfileRequest(BaseModel):
    graph: GraphPayload
    t_max: Optional[int] = None
    budget: Optional[int] = None
    threads: Optional[int] = None


class ProfileResponse(BaseModel):
    n: int
    t: Optional[int]
    k: Optional[int]
    status: str
    dimension: Optional[int]
    basis: Optional[List[int]]
    stats: Stats
    cells: List[DimensionResponse]


class GenerateRequest(BaseModel):
    kind: str
    sizes: List[int]


class GenerateResponse(BaseModel):
    n: int
    edges: List[Tuple[int, int]]
    text: str


class GadgetRequest(BaseModel):
    k: int


class GadgetResponse(BaseModel):
    n: int
    k: int
    order: int
    predicted_dimension: int
    edges: List[Tuple[int, int]]
    text: str


class VerifyRequest(BaseModel):
    tags: Optional[List[str]] = None


class VerifyResponse(BaseModel):
    ok: bool
    total: int
    passed: int
    failed: int
    checks: List[dict]
    text: str
