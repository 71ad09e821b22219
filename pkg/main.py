"""sfs-monoids - FastAPI Application

HTTP access to the semigroup, Schützenberger category, Σ round trip and
Morita equivalence checks.
"""

import logging
from contextlib import asynccontextmanager

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware

import config
from constructions.schutzenberger import build_d_category
from constructions.sigma import certify_sfs, unit_is_identity
from corpus import list_examples
from models.errors import INPUT_ERRORS, AlgebraError
from models.schemas import (
    DCategoryResponse,
    ExampleInfo,
    MoritaRequest,
    MoritaResponse,
    RoundTripResponse,
    SemigroupRequest,
    SemigroupSummary,
)
from morita.equivalence import decide_morita
from semigroups.core import green_classes, idempotents, make_from_table
from semigroups.structures import FiniteSemigroup

logging.basicConfig(level=getattr(logging, config.LOG_LEVEL, logging.WARNING))
logger = logging.getLogger(__name__)

SERVICE = "sfs-monoids"
VERSION = "1.0.0"


def to_http_error(exc: AlgebraError) -> HTTPException:
    """400 for unusable input, 422 when a verification or search fails."""
    status = 400 if isinstance(exc, INPUT_ERRORS) else 422
    return HTTPException(status_code=status, detail=f"{type(exc).__name__}: {exc}")


def load_semigroup(request: SemigroupRequest) -> FiniteSemigroup:
    try:
        return make_from_table(request.table, identity=request.identity)
    except AlgebraError as exc:
        raise to_http_error(exc) from exc


# =============================================================================
# Application Lifecycle
# =============================================================================

@asynccontextmanager
async def lifespan(app: FastAPI):
    """Application startup and shutdown events."""
    app.state.examples = list_examples()
    logger.info("%s ready with %d corpus examples", SERVICE, len(app.state.examples))

    yield

    logger.info("shutting down %s", SERVICE)


# =============================================================================
# FastAPI Application
# =============================================================================

app = FastAPI(
    title="sfs-monoids",
    description="Strict factorization systems, the Σ reconstruction and Morita equivalence of finite monoids",
    version=VERSION,
    lifespan=lifespan,
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["*"],
    allow_headers=["*"],
)


# =============================================================================
# API Endpoints
# =============================================================================

@app.get("/api/health")
async def health():
    """Health check endpoint."""
    return {"status": "ok", "service": SERVICE, "version": VERSION}


@app.get("/api/corpus", response_model=list[ExampleInfo])
async def corpus() -> list[ExampleInfo]:
    """Registered corpus examples."""
    return app.state.examples


@app.post("/api/semigroups/analyze", response_model=SemigroupSummary)
def analyze_semigroup(request: SemigroupRequest) -> SemigroupSummary:
    """Validate a Cayley table and summarise its idempotents and Green classes.

    Args:
        request: Square table and optional declared identity

    Returns:
        SemigroupSummary with the detected identity and class counts
    """
    semigroup = load_semigroup(request)
    classes = green_classes(semigroup)
    return SemigroupSummary(
        size=semigroup.size,
        identity=semigroup.identity,
        idempotents=idempotents(semigroup),
        l_class_count=len(classes.l_classes),
        r_class_count=len(classes.r_classes),
        d_class_count=len(classes.d_classes),
    )


@app.post("/api/d-category", response_model=DCategoryResponse)
def d_category(request: SemigroupRequest) -> DCategoryResponse:
    """Build D(S); monoids also get the SFS certificate."""
    semigroup = load_semigroup(request)
    try:
        d = build_d_category(semigroup)
        certificate = certify_sfs(d) if semigroup.is_monoid else None
    except AlgebraError as exc:
        raise to_http_error(exc) from exc
    return DCategoryResponse(
        object_count=d.cat.object_count,
        arrow_count=d.cat.arrow_count,
        certificate=certificate,
    )


@app.post("/api/roundtrip", response_model=RoundTripResponse)
def roundtrip(request: SemigroupRequest) -> RoundTripResponse:
    """Whether Σ(D(M)) reproduces M exactly."""
    monoid = load_semigroup(request)
    try:
        identical = unit_is_identity(monoid)
    except AlgebraError as exc:
        raise to_http_error(exc) from exc
    return RoundTripResponse(identical=identical, size=monoid.size)


@app.post("/api/morita", response_model=MoritaResponse)
def morita(request: MoritaRequest) -> MoritaResponse:
    """Decide Morita equivalence, returning the enlargement witness when found."""
    left, right = load_semigroup(request.left), load_semigroup(request.right)
    try:
        witness = decide_morita(left, right, request.budget)
    except AlgebraError as exc:
        raise to_http_error(exc) from exc
    return MoritaResponse(equivalent=witness is not None, witness=witness)


# =============================================================================
# Development Entry Point
# =============================================================================

if __name__ == "__main__":
    import uvicorn
    uvicorn.run("main:app", host="0.0.0.0", port=8000, reload=True)
