"""FastAPI application exposing the core operations as JSON endpoints."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import InputError, InternalConsistencyError, ResourceLimitError
from . import handlers, models

app = FastAPI(
    title="freewreath",
    version=__version__,
    description=(
        "Schreier transversals, Nielsen-Schreier bases, wreath-product "
        "embeddings, and extension reports for free and finite permutation groups."
    ),
)


@app.exception_handler(InputError)
async def _input_error(_request: Request, exc: InputError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(ResourceLimitError)
async def _resource_error(_request: Request, exc: ResourceLimitError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.exception_handler(InternalConsistencyError)
async def _internal_error(
    _request: Request, exc: InternalConsistencyError
) -> JSONResponse:
    return JSONResponse(status_code=500, content={"detail": str(exc)})


@app.get("/health")
def health() -> dict:
    return {"name": "freewreath", "version": __version__}


@app.post("/transversal", response_model=models.TransversalReport)
def transversal_endpoint(request: models.TransversalRequest) -> models.TransversalReport:
    return handlers.handle_transversal(request)


@app.post("/basis", response_model=models.BasisReport)
def basis_endpoint(request: models.BasisRequest) -> models.BasisReport:
    return handlers.handle_basis(request)


@app.post("/rewrite", response_model=models.RewriteReport)
def rewrite_endpoint(request: models.RewriteRequest) -> models.RewriteReport:
    return handlers.handle_rewrite(request)


@app.post("/embed", response_model=models.EmbedReport)
def embed_endpoint(request: models.EmbedRequest) -> models.EmbedReport:
    return handlers.handle_embed(request)


@app.post("/extend", response_model=models.ExtendReport)
def extend_endpoint(request: models.ExtendRequest) -> models.ExtendReport:
    return handlers.handle_extend(request)


@app.post("/witness", response_model=models.WitnessReport)
def witness_endpoint(request: models.WitnessRequest) -> models.WitnessReport:
    return handlers.handle_witness(request)


@app.post("/verify", response_model=models.VerifyReport)
def verify_endpoint(request: models.VerifyRequest) -> models.VerifyReport:
    return handlers.handle_verify(request)
