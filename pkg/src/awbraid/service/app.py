"""FastAPI wiring: one POST endpoint per operation, JSON in and out.

Suite runs can take minutes at the largest spin; results are cached
process-wide by the underlying modules, so repeated requests are cheap.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..matrix import SpecializationError
from ..ratq import PoleError
from . import handlers, schemas


def create_app() -> FastAPI:
    app = FastAPI(
        title="awbraid",
        version=__version__,
        description=(
            "Exact verification service for the three-strand Askey-Wilson braid "
            "algebra and the spin-s quantum centralizer."
        ),
    )

    def guard(fn, request):
        try:
            return fn(request)
        except handlers.UsageError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        except (SpecializationError, PoleError) as exc:
            raise HTTPException(status_code=409, detail=str(exc)) from exc

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/verify", response_model=schemas.VerifyResponse)
    def verify(request: schemas.VerifyRequest) -> schemas.VerifyResponse:
        return guard(handlers.verify, request)

    @app.post("/dim", response_model=schemas.DimResponse)
    def dim(request: schemas.DimRequest) -> schemas.DimResponse:
        return guard(handlers.dim, request)

    @app.post("/basis", response_model=schemas.BasisResponse)
    def basis(request: schemas.BasisRequest) -> schemas.BasisResponse:
        return guard(handlers.basis, request)

    @app.post("/reduce", response_model=schemas.ElementResponse)
    def reduce(request: schemas.ReduceRequest) -> schemas.ElementResponse:
        return guard(handlers.reduce_word, request)

    @app.post("/multiply", response_model=schemas.ElementResponse)
    def multiply(request: schemas.MultiplyRequest) -> schemas.ElementResponse:
        return guard(handlers.multiply_keys, request)

    @app.post("/structure-constants", response_model=schemas.StructureConstantsResponse)
    def structure(request: schemas.StructureConstantsRequest) -> schemas.StructureConstantsResponse:
        return guard(handlers.structure, request)

    @app.post("/appendix", response_model=schemas.AppendixResponse)
    def appendix(request: schemas.AppendixRequest) -> schemas.AppendixResponse:
        return guard(handlers.appendix, request)

    @app.post("/remark45", response_model=schemas.Remark45Response)
    def remark45(request: schemas.Remark45Request) -> schemas.Remark45Response:
        return guard(handlers.remark45, request)

    return app


app = create_app()
