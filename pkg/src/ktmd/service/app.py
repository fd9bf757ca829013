"""The HTTP service: one endpoint per solver operation."""

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import DisconnectedInput, KtmdError
from ..gadget import gadget_H
from ..graphs import Graph, generate, new_graph, write_edge_list
from ..metric import DistanceMatrix, distance_matrix, min_distinguishing_number
from ..oracle import predict_gadget, verification_suite
from ..solver import (
    DimensionResult,
    SolverConfig,
    brute_force_dimension,
    dimension_profile,
    exact_dimension,
    greedy_generator,
)
from .models import (
    DimensionalRequest,
    DimensionRequest,
    DimensionResponse,
    GadgetRequest,
    GadgetResponse,
    GenerateRequest,
    GenerateResponse,
    GraphPayload,
    ProfileRequest,
    ProfileResponse,
    Stats,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(title="ktmd", version="0.1.0")


@app.exception_handler(KtmdError)
async def _domain_error(request: Request, exc: KtmdError):
    return JSONResponse(status_code=400,
                        content={"detail": str(exc), "error": type(exc).__name__})


@app.exception_handler(ValueError)
async def _value_error(request: Request, exc: ValueError):
    return JSONResponse(status_code=400,
                        content={"detail": str(exc), "error": "ValueError"})


def _graph(payload: GraphPayload) -> Graph:
    return new_graph(payload.n, payload.edges)


def _resolve_t(matrix: DistanceMatrix, t):
    if t is not None:
        if t < 1:
            raise ValueError(f"truncation level must be at least 1, got {t}")
        return t
    if not matrix.connected:
        raise DisconnectedInput("a disconnected graph needs an explicit truncation level")
    return max(matrix.diameter(), 1)


def _config(budget, threads) -> SolverConfig:
    cfg = SolverConfig()
    if budget is not None:
        cfg = SolverConfig(node_budget=budget, threads=threads or 1)
    elif threads is not None:
        cfg = SolverConfig(threads=threads)
    return cfg


def _basis_list(basis):
    return None if basis is None else list(basis)


def _dimension_response(n: int, t, k, result: DimensionResult) -> DimensionResponse:
    return DimensionResponse(
        n=n, t=t, k=k, status=result.status.value, dimension=result.value,
        basis=_basis_list(result.basis),
        stats=Stats(nodes=result.stats.nodes, elapsed=result.stats.elapsed))


@app.get("/health")
def health():
    return {"ok": True}


@app.post("/dimension", response_model=DimensionResponse)
def dimension(req: DimensionRequest):
    g = _graph(req.graph)
    matrix = distance_matrix(g)
    t = _resolve_t(matrix, req.t)
    if req.solver == "brute":
        result = brute_force_dimension(matrix, t, req.k)
    elif req.solver == "greedy":
        result = greedy_generator(matrix, t, req.k)
    else:
        result = exact_dimension(matrix, t, req.k, _config(req.budget, req.threads))
    return _dimension_response(g.n, t, req.k, result)


@app.post("/dimensional", response_model=DimensionResponse)
def dimensional(req: DimensionalRequest):
    g = _graph(req.graph)
    matrix = distance_matrix(g)
    t = _resolve_t(matrix, req.t)
    value, pair = min_distinguishing_number(matrix, t)
    return DimensionResponse(n=g.n, t=t, k=None, status="Solved", dimension=value,
                             basis=list(pair), stats=Stats())


@app.post("/profile", response_model=ProfileResponse)
def profile(req: ProfileRequest):
    g = _graph(req.graph)
    matrix = distance_matrix(g)
    t_max = _resolve_t(matrix, req.t_max)
    results = dimension_profile(matrix, t_max, _config(req.budget, req.threads))
    cells = [
        _dimension_response(g.n, t, k, res)
        for (t, k), res in sorted(results.items())
    ]
    nodes = sum(c.stats.nodes for c in cells)
    elapsed = sum(c.stats.elapsed for c in cells)
    status = "Solved"
    if any(c.status == "UpperBoundOnly" for c in cells):
        status = "UpperBoundOnly"
    return ProfileResponse(n=g.n, t=t_max, k=None, status=status, dimension=None,
                           basis=None, stats=Stats(nodes=nodes, elapsed=elapsed),
                           cells=cells)


@app.post("/generate", response_model=GenerateResponse)
def generate_graph(req: GenerateRequest):
    g = generate(req.kind, *req.sizes)
    return GenerateResponse(n=g.n, edges=list(g.edges()), text=write_edge_list(g))


@app.post("/gadget", response_model=GadgetResponse)
def gadget(req: GadgetRequest):
    layout = gadget_H(req.k)
    pred = predict_gadget(req.k)
    return GadgetResponse(n=layout.order, k=req.k, order=layout.order,
                          predicted_dimension=pred.dimension,
                          edges=list(layout.graph.edges()),
                          text=write_edge_list(layout.graph))


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest):
    report = verification_suite(req.tags)
    summary = report.to_dict()
    return VerifyResponse(ok=summary["ok"], total=summary["total"],
                          passed=summary["passed"], failed=summary["failed"],
                          checks=summary["checks"], text=report.render())
