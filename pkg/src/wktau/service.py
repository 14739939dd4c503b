"""HTTP facade over the package: a small FastAPI app plus the plain
handler functions it shares with the command-line client.

All payloads use exact strings ("a/b", "c/d*s"); there are no floats
anywhere.  Expensive series are cached per (family, degree) inside the
process, which is the point of running this as a resident service.
"""

from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, ConfigDict, Field

from . import __version__
from .amatrix import CoeffMatrix
from .errors import BudgetError, UsageError
from .tau import (
    change_coords,
    correlator_genus,
    free_energy,
    intersection,
    z_in_family,
    z_schur,
)
from .verify import available_suites, run_suites

DEFAULT_DEGREE = 12


class AmatrixRequest(BaseModel):
    max_m: int = Field(ge=0)
    max_n: int = Field(ge=0)
    provenance: Literal["closed", "recursive"] = "closed"


class MatrixEntry(BaseModel):
    m: int
    n: int
    value: str


class AmatrixResponse(BaseModel):
    max_m: int
    max_n: int
    provenance: str
    entries: list[MatrixEntry]


class ExpandRequest(BaseModel):
    basis: Literal["schur", "p", "T", "t", "u"]
    degree: int = Field(default=DEFAULT_DEGREE, ge=0)
    max_terms: Optional[int] = Field(default=None, ge=1)


class SeriesTerm(BaseModel):
    monomial: list[tuple[int, int]]
    re: str
    im: str


class SchurTerm(BaseModel):
    partition: list[int]
    re: str
    im: str


class ExpandResponse(BaseModel):
    family: str
    degree_bound: int
    terms: Optional[list[SeriesTerm]] = None
    coefficients: Optional[list[SchurTerm]] = None


class IntersectRequest(BaseModel):
    indices: list[int] = Field(min_length=1)
    degree: Optional[int] = Field(default=None, ge=0)


class IntersectResponse(BaseModel):
    indices: list[int]
    genus: int
    value: str


class CheckReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    check: str
    params: dict
    passed: bool = Field(alias="pass")
    residuals: list[str]


class VerifyRequest(BaseModel):
    suites: list[str] = Field(default_factory=lambda: ["all"])
    degree: int = Field(default=DEFAULT_DEGREE, ge=0)
    max_weight: int = Field(default=30, ge=0)


class VerifyResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    passed: bool = Field(alias="pass")
    checks: list[CheckReport]


# -- handlers shared by the HTTP routes and the in-process CLI client -----


def handle_amatrix(req: AmatrixRequest) -> AmatrixResponse:
    if req.provenance == "closed":
        table = CoeffMatrix.closed_block(req.max_m, req.max_n)
    else:
        table = CoeffMatrix.recursive_block(req.max_m, req.max_n)
    entries = [
        MatrixEntry(m=m, n=n, value=str(v)) for m, n, v in table.entries()
    ]
    return AmatrixResponse(
        max_m=req.max_m, max_n=req.max_n, provenance=req.provenance,
        entries=entries,
    )


def handle_expand(req: ExpandRequest) -> ExpandResponse:
    if req.basis == "schur":
        coeffs = [
            SchurTerm(partition=list(mu.parts), re=str(c.re), im=str(c.im))
            for mu, c in z_schur(req.degree)
        ]
        if req.max_terms is not None and len(coeffs) > req.max_terms:
            raise BudgetError(
                f"{len(coeffs)} terms exceed the budget of {req.max_terms}"
            )
        return ExpandResponse(
            family="schur", degree_bound=req.degree, coefficients=coeffs
        )
    series = z_in_family(req.degree, req.basis)
    if req.max_terms is not None and len(series) > req.max_terms:
        raise BudgetError(
            f"{len(series)} terms exceed the budget of {req.max_terms}"
        )
    return ExpandResponse(
        family=series.family,
        degree_bound=series.degree_bound,
        terms=[SeriesTerm(**term) for term in series.to_terms()],
    )


def handle_intersect(req: IntersectRequest) -> IntersectResponse:
    genus = correlator_genus(req.indices)
    needed = sum(2 * a + 1 for a in req.indices)
    degree = req.degree if req.degree is not None else DEFAULT_DEGREE
    if needed > degree:
        raise UsageError(
            f"key needs degree {needed} but only {degree} requested; "
            "increase the degree"
        )
    f = free_energy(z_in_family(degree, "t"))
    value = intersection(req.indices, f)
    return IntersectResponse(
        indices=sorted(req.indices), genus=genus, value=str(value)
    )


def handle_verify(req: VerifyRequest) -> VerifyResponse:
    result = run_suites(req.suites, degree=req.degree, max_weight=req.max_weight)
    return VerifyResponse(
        passed=result["pass"],
        checks=[
            CheckReport(
                check=r["check"],
                params=r["params"],
                passed=r["pass"],
                residuals=r["residuals"],
            )
            for r in result["checks"]
        ],
    )


# -- FastAPI app -------------------------------------------------------------

app = FastAPI(
    title="wktau",
    version=__version__,
    description=(
        "Exact Witten-Kontsevich tau-function service: coefficient tables, "
        "series expansions, intersection numbers and verification suites."
    ),
)


def _client_error(exc):
    return HTTPException(status_code=400, detail=str(exc))


@app.get("/")
def root():
    return {
        "name": "wktau",
        "version": __version__,
        "endpoints": ["/amatrix", "/expand", "/intersect", "/verify"],
        "suites": available_suites(),
    }


@app.post("/amatrix", response_model=AmatrixResponse)
def amatrix_endpoint(req: AmatrixRequest):
    try:
        return handle_amatrix(req)
    except UsageError as exc:
        raise _client_error(exc) from exc


@app.post("/expand", response_model=ExpandResponse, response_model_exclude_none=True)
def expand_endpoint(req: ExpandRequest):
    try:
        return handle_expand(req)
    except BudgetError as exc:
        raise HTTPException(status_code=413, detail=str(exc)) from exc
    except UsageError as exc:
        raise _client_error(exc) from exc


@app.post("/intersect", response_model=IntersectResponse)
def intersect_endpoint(req: IntersectRequest):
    try:
        return handle_intersect(req)
    except UsageError as exc:
        raise _client_error(exc) from exc


@app.post("/verify", response_model=VerifyResponse, response_model_by_alias=True)
def verify_endpoint(req: VerifyRequest):
    try:
        return handle_verify(req)
    except UsageError as exc:
        raise _client_error(exc) from exc
