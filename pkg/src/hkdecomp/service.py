"""HTTP service wrapping the toolkit.

POST /jobs runs one job and returns the report payload plus timing; the
payload is the same document the CLI writes, so clients and the CLI
interoperate byte-for-byte on the report itself.
"""

from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .errors import (BudgetExceededError, CertificateError,
                     ElementSelectionError, ToolkitError)
from .jobs import JobSpec, run_job


class RingModel(BaseModel):
    p: int = Field(description="prime characteristic")
    vars: list[str] = Field(description="ordered variable names")
    quotient: list[str] = Field(default_factory=list,
                                description="homogeneous defining relations, optional")


class ParamsModel(BaseModel):
    n_max: Optional[int] = None
    q_list: Optional[list[int]] = None
    seed: int = 0
    degree: int = 1
    retries: int = 8
    budget: Optional[int] = None


class CombinationTermModel(BaseModel):
    coefficient: int
    ideal: list[str]


class CombinationModel(BaseModel):
    terms: list[CombinationTermModel]


class JobRequest(BaseModel):
    command: Literal["hk", "ghk", "lcprobe", "decompose", "verify", "selfcheck"]
    ring: Optional[RingModel] = None
    ideal: list[str] = Field(default_factory=list)
    params: ParamsModel = Field(default_factory=ParamsModel)
    combination: Optional[CombinationModel] = None


class JobResponse(BaseModel):
    report: dict
    timing_ms: float


class HealthResponse(BaseModel):
    status: str
    version: str


app = FastAPI(title="hkdecomp service", version=__version__)


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/jobs", response_model=JobResponse)
def submit_job(request: JobRequest) -> JobResponse:
    if request.command != "selfcheck" and request.ring is None:
        raise HTTPException(status_code=400, detail="this command needs a ring")
    ring = request.ring or RingModel(p=2, vars=["x"])
    spec = JobSpec(
        command=request.command,
        p=ring.p,
        variables=tuple(ring.vars),
        quotient=tuple(ring.quotient),
        ideal=tuple(request.ideal),
        n_max=request.params.n_max,
        q_list=tuple(request.params.q_list) if request.params.q_list else None,
        seed=request.params.seed,
        degree=request.params.degree,
        retries=request.params.retries,
        budget=request.params.budget,
        combination=request.combination.model_dump() if request.combination else None,
    )
    try:
        doc = run_job(spec)
    except BudgetExceededError as exc:
        raise HTTPException(status_code=409, detail=str(exc)) from exc
    except (ElementSelectionError, CertificateError) as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    except ToolkitError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return JobResponse(report=doc.payload(), timing_ms=doc.timing_ms)
