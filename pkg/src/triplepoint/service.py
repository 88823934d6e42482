"""HTTP service wrapping the solver and verifiers.

Instances travel as the plain-text file format; all coordinates in
responses are exact rationals serialized as "num/den" strings. Run with:

    uvicorn triplepoint.service:app
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .circle import CircleInstance, CircleSolution, DEFAULT_CAP, solve_circle
from .counterexamples import (
    facets_vertex_adjacent,
    octahedron_cover_search,
    verify_figure1,
    verify_nonconvex_example,
)
from .errors import CapExceeded, InputError
from .instancefile import generate, parse_instance
from .lines import LineInstance, LineSolution, solve_lines
from .oracle import ORACLE_CAP, oracle_solve
from .render import render_svg
from .space3d import verify_convex_position_3d, verify_table

app = FastAPI(
    title="triplepoint",
    description=(
        "Exact-arithmetic colorful triple partitions of lines and circle "
        "points with a common witness point"
    ),
    version="0.1.0",
)


def _rat(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class SolveRequest(BaseModel):
    instance: str = Field(description="instance file text")
    cap: int = Field(default=DEFAULT_CAP, ge=1)
    include_svg: bool = False
    hint: Optional[tuple[str, str]] = Field(
        default=None, description="interior point of a witness cell"
    )


class TraceStepOut(BaseModel):
    iteration: int
    count_before: int
    count_after: int
    touched: tuple[int, int, int]


class TripleOut(BaseModel):
    indices: tuple[int, int, int]
    bounding: bool
    middle: Optional[int] = None


class CircleSolveResponse(BaseModel):
    triples: list[TripleOut]
    middles: list[int]
    gamma_ends: Optional[tuple[int, int]]
    min_unbounding: int
    trace: list[TraceStepOut]
    svg: Optional[str] = None


class LinesSolveResponse(BaseModel):
    triples: list[tuple[int, int, int]]
    away_lines: list[int]
    witness: tuple[str, str]
    trace: list[TraceStepOut]
    svg: Optional[str] = None


class OracleResponse(BaseModel):
    count: int
    partitions: list[list[tuple[int, int, int]]]


class GenerateRequest(BaseModel):
    kind: str
    k: int = Field(ge=1)
    seed: int = 0


class GenerateResponse(BaseModel):
    instance: str


class RenderResponse(BaseModel):
    svg: str


class VerifyResponse(BaseModel):
    ok: bool
    detail: dict


def _http_error(exc: Exception) -> HTTPException:
    code = "cap" if isinstance(exc, CapExceeded) else "validation"
    return HTTPException(status_code=422, detail={"code": code, "message": str(exc)})


def _trace_out(solution: CircleSolution) -> list[TraceStepOut]:
    return [
        TraceStepOut(
            iteration=s.iteration,
            count_before=s.count_before,
            count_after=s.count_after,
            touched=s.touched,
        )
        for s in solution.trace
    ]


@app.get("/")
def info() -> dict:
    return {"service": "triplepoint", "version": __version__}


@app.post("/solve/lines", response_model=LinesSolveResponse)
def solve_lines_endpoint(request: SolveRequest) -> LinesSolveResponse:
    try:
        parsed = parse_instance(request.instance)
        if not isinstance(parsed.instance, LineInstance):
            raise HTTPException(
                status_code=422,
                detail={"code": "validation", "message": "expected a lines2d instance"},
            )
        hint = parsed.hint
        if request.hint is not None:
            hint = (Fraction(request.hint[0]), Fraction(request.hint[1]))
        solution: LineSolution = solve_lines(parsed.instance, cap=request.cap, hint=hint)
    except (InputError, CapExceeded) as exc:
        raise _http_error(exc) from exc
    return LinesSolveResponse(
        triples=list(solution.triples),
        away_lines=list(solution.away_lines),
        witness=(_rat(solution.witness[0]), _rat(solution.witness[1])),
        trace=_trace_out(solution.circle),
        svg=render_svg(solution) if request.include_svg else None,
    )


@app.post("/solve/circle", response_model=CircleSolveResponse)
def solve_circle_endpoint(request: SolveRequest) -> CircleSolveResponse:
    try:
        parsed = parse_instance(request.instance)
        if not isinstance(parsed.instance, CircleInstance):
            raise HTTPException(
                status_code=422,
                detail={"code": "validation", "message": "expected a circle instance"},
            )
        solution = solve_circle(parsed.instance, cap=request.cap)
    except (InputError, CapExceeded) as exc:
        raise _http_error(exc) from exc
    ann = solution.annotated
    return CircleSolveResponse(
        triples=[
            TripleOut(indices=t.indices, bounding=t.bounding, middle=t.middle)
            for t in ann.triples
        ],
        middles=list(ann.middles),
        gamma_ends=ann.gamma_ends,
        min_unbounding=solution.min_unbounding,
        trace=_trace_out(solution),
        svg=render_svg(solution) if request.include_svg else None,
    )


@app.post("/oracle", response_model=OracleResponse)
def oracle_endpoint(request: SolveRequest) -> OracleResponse:
    try:
        parsed = parse_instance(request.instance)
        if not isinstance(parsed.instance, CircleInstance):
            raise HTTPException(
                status_code=422,
                detail={"code": "validation", "message": "expected a circle instance"},
            )
        found = oracle_solve(parsed.instance, cap=min(request.cap, ORACLE_CAP))
    except (InputError, CapExceeded) as exc:
        raise _http_error(exc) from exc
    return OracleResponse(
        count=len(found),
        partitions=[list(ann.partition.triples) for ann in found],
    )


@app.post("/generate", response_model=GenerateResponse)
def generate_endpoint(request: GenerateRequest) -> GenerateResponse:
    try:
        text = generate(request.kind, request.k, request.seed)
    except (InputError, CapExceeded) as exc:
        raise _http_error(exc) from exc
    return GenerateResponse(instance=text)


@app.post("/render", response_model=RenderResponse)
def render_endpoint(request: SolveRequest) -> RenderResponse:
    try:
        parsed = parse_instance(request.instance)
        if isinstance(parsed.instance, LineInstance):
            result = solve_lines(parsed.instance, cap=request.cap, hint=parsed.hint)
        elif isinstance(parsed.instance, CircleInstance):
            result = solve_circle(parsed.instance, cap=request.cap)
        else:
            raise HTTPException(
                status_code=422,
                detail={
                    "code": "validation",
                    "message": "expected a lines2d or circle instance",
                },
            )
    except (InputError, CapExceeded) as exc:
        raise _http_error(exc) from exc
    return RenderResponse(svg=render_svg(result))


@app.get("/verify/figure1", response_model=VerifyResponse)
def verify_figure1_endpoint() -> VerifyResponse:
    report = verify_figure1()
    return VerifyResponse(
        ok=report.ok,
        detail={
            "partitions": [
                {
                    "first": v.first,
                    "second": v.second,
                    "disjoint": v.disjoint,
                }
                for v in report.partitions
            ],
            "not_convex_position": report.not_convex_position,
        },
    )


@app.get("/verify/octahedron", response_model=VerifyResponse)
def verify_octahedron_endpoint(max_t: int = 4) -> VerifyResponse:
    rows = []
    ok = True
    try:
        for t in range(1, max_t + 1):
            result = octahedron_cover_search(t)
            expected = t % 2 == 0
            row_ok = result.feasible == expected
            witness = None
            if result.feasible:
                counts = result.witness_multiplicities()
                support = sorted(counts)
                row_ok = (
                    row_ok
                    and len(support) == 4
                    and all(
                        facets_vertex_adjacent(f, g)
                        for i, f in enumerate(support)
                        for g in support[i + 1 :]
                    )
                )
                witness = {str(f): counts[f] for f in support}
            rows.append(
                {"t": t, "feasible": result.feasible, "witness": witness, "ok": row_ok}
            )
            ok = ok and row_ok
    except CapExceeded as exc:
        raise _http_error(exc) from exc
    return VerifyResponse(ok=ok, detail={"rows": rows})


@app.get("/verify/planes3d", response_model=VerifyResponse)
def verify_planes3d_endpoint() -> VerifyResponse:
    position = verify_convex_position_3d()
    report = verify_table()
    return VerifyResponse(
        ok=report.ok and position.ok,
        detail={
            "convex_position": position.ok,
            "rows": [
                {
                    "partition": [i + 1 for i in row.partition],
                    "sum": str(row.computed_sum),
                    "quad": [i + 1 for i in row.quad],
                    "ok": row.ok,
                }
                for row in report.rows
            ],
        },
    )


@app.get("/verify/nonconvex", response_model=VerifyResponse)
def verify_nonconvex_endpoint() -> VerifyResponse:
    report = verify_nonconvex_example()
    return VerifyResponse(
        ok=report.ok,
        detail={
            "colorings": [
                {
                    "coloring": v.coloring,
                    "partition": v.partition,
                    "common_point": (
                        None
                        if v.common_point is None
                        else [_rat(v.common_point[0]), _rat(v.common_point[1])]
                    ),
                }
                for v in report.verdicts
            ],
            "not_convex_position": report.not_convex_position,
        },
    )
