"""FastAPI application exposing the package over HTTP.

All endpoints are stateless POSTs: the full input travels in the request.
Malformed input (unparseable payloads, out-of-range indices, refused
searches) maps to 422; computed verdicts, including negative ones, are 200
responses.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..errors import SearchCapExceeded
from . import handlers, schemas

app = FastAPI(
    title="bckcodes",
    version=__version__,
    description=(
        "Construct BCK-algebras from n-ary block codes, verify axioms, "
        "regenerate codes through cut functions, and analyse ideals and "
        "isomorphism."
    ),
)


def _guard(fn, req):
    try:
        return fn(req)
    except (ValueError, SearchCapExceeded) as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/validate", response_model=schemas.ValidationOut)
def validate(req: schemas.CodePayload) -> schemas.ValidationOut:
    return _guard(handlers.validate_code, req)


@app.post("/build", response_model=schemas.BuildOut)
def build(req: schemas.BuildIn) -> schemas.BuildOut:
    return _guard(handlers.build, req)


@app.post("/verify", response_model=schemas.VerifyOut)
def verify(req: schemas.VerifyIn) -> schemas.VerifyOut:
    return _guard(handlers.verify, req)


@app.post("/generate", response_model=schemas.GenerateOut)
def generate(req: schemas.GenerateIn) -> schemas.GenerateOut:
    return _guard(handlers.generate, req)


@app.post("/roundtrip", response_model=schemas.RoundtripOut)
def roundtrip(req: schemas.CodePayload) -> schemas.RoundtripOut:
    return _guard(handlers.roundtrip, req)


@app.post("/ideals/subset", response_model=schemas.SubsetOut)
def ideal_subset(req: schemas.SubsetIn) -> schemas.SubsetOut:
    return _guard(handlers.ideal_subset, req)


@app.post("/ideals/enumerate", response_model=schemas.EnumerateOut)
def ideal_enumerate(req: schemas.EnumerateIn) -> schemas.EnumerateOut:
    return _guard(handlers.ideal_enumerate, req)


@app.post("/ideals/candidate", response_model=schemas.SubsetOut)
def ideal_candidate(req: schemas.CandidateIn) -> schemas.SubsetOut:
    return _guard(handlers.ideal_candidate, req)


@app.post("/isomorphism", response_model=schemas.IsoOut)
def isomorphism(req: schemas.IsoIn) -> schemas.IsoOut:
    return _guard(handlers.isomorphism, req)
