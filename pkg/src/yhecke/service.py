"""HTTP service exposing the invariant engine.

The process keeps the algebra, trace and Jones memo tables warm between
requests, which is what makes repeated catalog computations cheap; the CLI is
a thin client of these endpoints.
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, HTTPException

from . import __version__
from .braids import BraidWord, FramedBraid
from .catalog import CatalogError, parse_catalog, parse_pairs
from .esystem import esolution
from .invariants import (SkeinGuardError, delta, gamma_framed, gamma_specialized,
                         jones_u, theta_combinatorial, theta_d_cap,
                         theta_d_small, theta_skein, theta2_combinatorial,
                         _exact)
from .quotients import QuotientKind, dim_ctl, dim_ftl, dim_y, dim_ytl, dpartition_dim, dpartitions, is_irrep
from .rings import ParseError, PoleError, Poly, RatFun, parse_expr
from .schemas import (HealthResponse, InvariantRequest, InvariantResponse,
                      PairResult, PairsRequest, PairsResponse, RouteValue,
                      TablesRequest, TablesResponse)

app = FastAPI(title="yhecke", version=__version__)


def _usage(message: str) -> HTTPException:
    return HTTPException(status_code=400, detail={"code": "usage", "message": message})


def _computation(message: str) -> HTTPException:
    return HTTPException(status_code=409, detail={"code": "computation", "message": message})


def _fmt(value) -> str:
    return _exact(RatFun.of(value)).canonical_str()


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


def _parse_e(text: str):
    try:
        return parse_expr(text)
    except (ParseError, PoleError) as exc:
        raise _usage(f"bad E value: {exc}")


@app.post("/invariant", response_model=InvariantResponse)
def invariant(req: InvariantRequest) -> InvariantResponse:
    try:
        braid = BraidWord(req.strands, tuple(req.braid))
    except ValueError as exc:
        raise _usage(str(exc))
    name = req.invariant
    try:
        if name in ("gamma", "delta"):
            return _framed_invariant(req, braid)
        routes = _theta_family_routes(req, braid)
    except (PoleError, SkeinGuardError, AssertionError) as exc:
        raise _computation(str(exc))
    except ValueError as exc:
        raise _usage(str(exc))
    values = [RouteValue(route=r, value=v) for r, v in routes]
    agree = None
    if req.route == "all" and len(values) > 1:
        parsed = [parse_expr(v.value) for v in values]
        agree = all(p == parsed[0] for p in parsed[1:])
    return InvariantResponse(invariant=name, routes=values, agree=agree)


def _theta_family_routes(req: InvariantRequest, braid: BraidWord) -> list[tuple[str, str]]:
    name = req.invariant
    if name in ("jones", "homflypt"):
        d = 1
        e_val: object = Fraction(1)
    else:
        if req.d is None and req.E is None:
            raise _usage(f"--d (or --E) is required for {name}")
        d = req.d
        e_val = Fraction(1, d) if d is not None else None
    if req.E is not None:
        e_val = _parse_e(req.E)
    generic_lam = name in ("Theta", "homflypt")
    want = ["trace", "skein", "comb"] if req.route == "all" else [req.route]
    out: list[tuple[str, str]] = []
    for route in want:
        if route == "trace":
            if d is None:
                raise _usage("the trace route needs --d")
            if req.E is not None and RatFun.of(e_val) != RatFun.of(Fraction(1, d)):
                raise _usage("the trace route computes at E = 1/d; drop --E or use comb/skein")
            value = theta_d_cap(braid, d) if generic_lam else theta_d_small(braid, d)
            out.append((route, _fmt(value)))
        elif route == "comb":
            v = theta_combinatorial(braid) if generic_lam else RatFun.of(theta2_combinatorial(braid))
            if e_val is not None:
                v = v.substitute({"E": e_val})
            out.append((route, _fmt(v)))
        elif route == "skein":
            v = theta_skein(braid, generic_lambda=generic_lam)
            if e_val is not None:
                v = v.substitute({"E": e_val})
            out.append((route, _fmt(v)))
    if name == "jones" and req.route == "all":
        # classical construction as an extra cross-check, aligned via sqrt_u -> q
        v = jones_u(braid).substitute({"sqrt_u": Poly.var("q")})
        out.append(("trace-u", _fmt(v)))
    return out


def _framed_invariant(req: InvariantRequest, braid: BraidWord) -> InvariantResponse:
    if req.route not in ("trace", "all"):
        raise _usage(f"route {req.route!r} unsupported for {req.invariant}: only the trace route exists")
    if req.d is None:
        raise _usage(f"--d is required for {req.invariant}")
    D = tuple(req.D) if req.D else tuple(range(req.d))
    if req.invariant == "delta" and req.framings:
        raise _usage("delta is the all-zero-framings restriction; drop --framings or use gamma")
    try:
        if req.invariant == "delta":
            value = delta(braid, req.d, D, req.specialized)
        else:
            framings = tuple(req.framings) if req.framings else (0,) * braid.strands
            fb = FramedBraid(req.d, framings, braid)
            value = gamma_specialized(fb, D) if req.specialized else gamma_framed(fb, D)
    except (PoleError, AssertionError) as exc:
        raise _computation(str(exc))
    except ValueError as exc:
        raise _usage(str(exc))
    return InvariantResponse(invariant=req.invariant,
                             routes=[RouteValue(route="trace", value=_fmt(value))],
                             agree=None)


@app.post("/tables", response_model=TablesResponse)
def tables(req: TablesRequest) -> TablesResponse:
    if req.table == "dims":
        row = [dim_y(req.d, req.n), dim_ytl(req.d, req.n), dim_ctl(req.d, req.n), dim_ftl(req.d, req.n)]
        return TablesResponse(headers=["Y", "YTL", "CTL", "FTL"], rows=[[str(v) for v in row]])
    if req.table == "esystem":
        if req.d > 16:
            raise _usage("esystem table capped at d <= 16")
        rows = []
        from itertools import combinations
        for size in range(1, req.d + 1):
            for D in combinations(range(req.d), size):
                sol = esolution(req.d, D)
                rows.append(["{" + ",".join(map(str, D)) + "}",
                             "(" + ", ".join(str(v) for v in sol.x) + ")",
                             str(sol.E_D)])
        return TablesResponse(headers=["D", "x", "E_D"], rows=rows)
    # irreps
    rows = []
    for lam in dpartitions(req.d, req.n):
        label = "(" + " | ".join(",".join(map(str, p)) if p else "-" for p in lam) + ")"
        rows.append([label, str(dpartition_dim(lam))]
                    + [("yes" if is_irrep(kind, lam) else "no") for kind in
                       (QuotientKind.YTL, QuotientKind.CTL, QuotientKind.FTL)])
    return TablesResponse(headers=["d-partition", "dim", "YTL", "CTL", "FTL"], rows=rows)


@app.post("/pairs", response_model=PairsResponse)
def pairs(req: PairsRequest) -> PairsResponse:
    try:
        catalog = parse_catalog(req.catalog_text)
        pair_list = parse_pairs(req.pairs_text)
    except CatalogError as exc:
        raise _usage(f"catalog: {exc}")
    results = []
    for name_a, name_b, ref_text in pair_list:
        missing = [n for n in (name_a, name_b) if n not in catalog]
        if missing:
            raise _usage(f"missing catalog names: {', '.join(missing)}")
        try:
            va = RatFun.of(theta2_combinatorial(catalog[name_a].braid()))
            vb = RatFun.of(theta2_combinatorial(catalog[name_b].braid()))
            diff = va - vb
        except (PoleError, SkeinGuardError) as exc:
            raise _computation(f"{name_a}/{name_b}: {exc}")
        ref_str = None
        match = None
        if ref_text is not None:
            try:
                ref = parse_expr(ref_text)
            except (ParseError, PoleError) as exc:
                raise _usage(f"bad reference for ({name_a}, {name_b}): {exc}")
            ref_str = _fmt(ref)
            match = diff == ref
        results.append(PairResult(first=name_a, second=name_b,
                                  difference=_fmt(diff), reference=ref_str, match=match))
    return PairsResponse(results=results)
