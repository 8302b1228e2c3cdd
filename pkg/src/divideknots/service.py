"""HTTP service wrapping the core package.

Run with ``uvicorn divideknots.service:app``.  Requests mirror the CLI
sources (inline Gauss code or snail index) and responses carry the
same report documents the CLI emits.
"""

from typing import List, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field, model_validator

from . import __version__
from .defect import SearchConfig
from .divides import build_map, faces, parse_divide, snail
from .errors import DivideError
from .report import family_rows, report_document

app = FastAPI(
    title="divide knot invariants",
    description="Exact Seifert forms, classical invariants and certified "
                "topological four-genus bounds for divide knots.",
    version=__version__,
)


class DivideSource(BaseModel):
    """Exactly one of ``gauss`` (may be the empty string) or ``snail``."""

    gauss: Optional[str] = None
    snail: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _exactly_one_source(self):
        if (self.gauss is None) == (self.snail is None):
            raise ValueError("provide exactly one of 'gauss' or 'snail'")
        return self

    def to_divide(self):
        return snail(self.snail) if self.snail is not None else parse_divide(self.gauss)


class ReportRequest(DivideSource):
    black: Optional[str] = None
    swap_colours: bool = False
    coeff_bound: int = Field(default=1, ge=0)
    max_candidates: int = Field(default=100_000, ge=1)
    time_budget: float = Field(default=60.0, gt=0)
    search: bool = True

    @property
    def search_config(self) -> SearchConfig:
        return SearchConfig(coeff_bound=self.coeff_bound,
                            max_candidates=self.max_candidates,
                            time_budget=self.time_budget)


class FamilyRequest(BaseModel):
    start: int = Field(ge=1)
    end: int = Field(ge=1)
    swap_colours: bool = False
    search: bool = True

    @model_validator(mode="after")
    def _ordered(self):
        if self.end < self.start:
            raise ValueError("'end' must not precede 'start'")
        return self


class ValidateResponse(BaseModel):
    valid: bool
    gauss: Optional[str] = None
    double_points: Optional[int] = None
    regions: Optional[int] = None
    inner_regions: Optional[int] = None
    check: Optional[str] = None
    detail: Optional[str] = None


class RegionModel(BaseModel):
    id: str
    colour: str
    inner: bool


class DivideModel(BaseModel):
    gauss: str
    double_points: int
    snail: Optional[int]
    swap_colours: bool
    regions: List[RegionModel]


class GeneratorModel(BaseModel):
    index: int
    kind: str
    ref: str


class InvariantsModel(BaseModel):
    genus: int
    smooth_g4: int
    alexander: List[List[int]]
    alexander_pretty: str
    determinant: int
    signature: int
    signature_convention: str


class G4TopModel(BaseModel):
    lower: int
    upper: int
    exact: bool


class UnitModel(BaseModel):
    sign: int
    exponent: int


class CertificateModel(BaseModel):
    rank: int
    vectors: List[List[int]]
    restricted_matrix: List[List[int]]
    unit: UnitModel
    upper_bound: int


class ReportResponse(BaseModel):
    divide: DivideModel
    basis: List[GeneratorModel]
    seifert_matrix: List[List[int]]
    invariants: InvariantsModel
    g4top: G4TopModel
    certificates: List[CertificateModel]


class FamilyRow(BaseModel):
    n: int
    gauss: str
    genus: int
    smooth_g4: int
    signature: int
    g4top: G4TopModel
    ratio: str


class FamilyResponse(BaseModel):
    rows: List[FamilyRow]


class HealthResponse(BaseModel):
    status: str
    version: str


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/validate", response_model=ValidateResponse)
def validate(request: DivideSource) -> ValidateResponse:
    try:
        divide = request.to_divide()
        regions = faces(build_map(divide))
    except DivideError as exc:
        return ValidateResponse(valid=False, check=type(exc).__name__, detail=str(exc))
    return ValidateResponse(
        valid=True,
        gauss=divide.gauss_code,
        double_points=divide.crossing_count,
        regions=len(regions),
        inner_regions=sum(1 for r in regions if r.is_inner),
    )


@app.post("/report", response_model=ReportResponse)
def report(request: ReportRequest) -> ReportResponse:
    try:
        doc = report_document(request.to_divide(), black=request.black,
                              swap=request.swap_colours,
                              config=request.search_config,
                              run_search=request.search)
    except DivideError as exc:
        raise HTTPException(status_code=422, detail={
            "check": type(exc).__name__, "message": str(exc)})
    return ReportResponse(**doc)


@app.post("/family", response_model=FamilyResponse)
def family(request: FamilyRequest) -> FamilyResponse:
    rows = family_rows(request.start, request.end, swap=request.swap_colours,
                       run_search=request.search)
    return FamilyResponse(rows=[FamilyRow(**row) for row in rows])
