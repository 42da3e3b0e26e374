"""HTTP service exposing the conformance checker.

Endpoints take model text (not file paths), so the service never touches the
client filesystem. Domain failures (parse, validation, mapping, formula
construction) come back as 422 with a phase tag and one message per problem.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .checker import check_conformance
from .formula import CycleError
from .incarnation import MappingError
from .model import ProcessModel, ValidationFailure, validate
from .oracle import enumerate_traces
from .reporting import render_report_text, report_to_dict
from .text import ParseFailure, parse

app = FastAPI(title="wfmcheck", version=__version__)


class CheckRequest(BaseModel):
    concrete: str = Field(description="concrete model, .wfm text")
    reference: str = Field(description="reference model, .wfm text")
    mapping: str = Field(description="incarnation mapping name")


class DirectionPayload(BaseModel):
    direction: str
    status: str
    witness: list[str] | None
    formula: str


class IncarnationPayload(BaseModel):
    concrete: str
    reference: str
    status: str
    forward: DirectionPayload
    backward: DirectionPayload


class ReferencePayload(BaseModel):
    reference: str
    missing: bool
    incarnations: list[IncarnationPayload]


class ReportPayload(BaseModel):
    concrete: str
    reference: str
    mapping: str
    overall: str
    warnings: list[str]
    results: list[ReferencePayload]


class CheckResponse(BaseModel):
    overall: str
    report: ReportPayload
    text: str


class ValidateRequest(BaseModel):
    model: str = Field(description="model to validate, .wfm text")


class ValidateResponse(BaseModel):
    name: str | None
    errors: list[str]


class TracesRequest(BaseModel):
    model: str = Field(description="model to enumerate, .wfm text")
    bound: int = Field(2, ge=1, le=4, description="per-node firing bound")


class TracesResponse(BaseModel):
    traces: list[list[str]]
    discarded_runs: int


def _fail(phase: str, errors: list[str]) -> HTTPException:
    return HTTPException(status_code=422, detail={"phase": phase, "errors": errors})


def _parse_model(text: str, role: str) -> ProcessModel:
    try:
        return parse(text)
    except ParseFailure as exc:
        raise _fail("parse", [f"{role}: {error}" for error in exc.errors]) from None


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/check", response_model=CheckResponse)
def check(request: CheckRequest) -> CheckResponse:
    concrete = _parse_model(request.concrete, "concrete")
    reference = _parse_model(request.reference, "reference")
    try:
        report = check_conformance(concrete, reference, request.mapping)
    except ValidationFailure as exc:
        raise _fail("validate", [f"{exc.model_name}: {d}" for d in exc.diagnostics]) from None
    except MappingError as exc:
        raise _fail("mapping", list(exc.problems)) from None
    except CycleError as exc:
        raise _fail("formula", [str(exc)]) from None
    return CheckResponse(
        overall=report.overall.value,
        report=ReportPayload(**report_to_dict(report)),
        text=render_report_text(report),
    )


@app.post("/validate", response_model=ValidateResponse)
def validate_model(request: ValidateRequest) -> ValidateResponse:
    try:
        model = parse(request.model)
    except ParseFailure as exc:
        return ValidateResponse(name=None, errors=[str(error) for error in exc.errors])
    return ValidateResponse(name=model.name, errors=[str(d) for d in validate(model)])


@app.post("/traces", response_model=TracesResponse)
def traces(request: TracesRequest) -> TracesResponse:
    model = _parse_model(request.model, "model")
    try:
        result = enumerate_traces(model, request.bound)
    except ValidationFailure as exc:
        raise _fail("validate", [f"{exc.model_name}: {d}" for d in exc.diagnostics]) from None
    return TracesResponse(
        traces=[list(trace) for trace in result.sorted()],
        discarded_runs=result.discarded_runs,
    )
