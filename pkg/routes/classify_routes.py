from typing import Callable, Optional

from fastapi import APIRouter, Depends, HTTPException, Query

from auth.auth import require_api_key
from utils.errors import BipartiteTsgError, WitnessFailed
from utils.logger import get_logger
from utils.reports import (
    Envelope,
    PermRequest,
    classification_report,
    enumerate_report,
    group_from,
    permutation_report,
)

router = APIRouter(prefix="/api", tags=["Classification"], dependencies=[Depends(require_api_key)])
log = get_logger("ClassifyRoutes")


def run_report(build: Callable[[], Envelope]) -> Envelope:
    """Build a report, turning module errors into HTTP errors with the error code as detail."""
    try:
        return build()
    except WitnessFailed as exc:
        log.exception(f"Witness failed: {exc}")
        raise HTTPException(status_code=409, detail={"code": exc.code, "message": str(exc)})
    except BipartiteTsgError as exc:
        log.exception(f"{exc.code}: {exc}")
        status = 422 if isinstance(exc, ValueError) else 500
        raise HTTPException(status_code=status, detail={"code": exc.code, "message": str(exc)})


@router.get("/classify", response_model=Envelope)
def classify_endpoint(
    n: int = Query(..., description="Size of each part of K_{n,n}"),
    m: Optional[int] = Query(None, description="Order parameter of Z_m or D_m"),
    r: Optional[int] = Query(None),
    s: Optional[int] = Query(None),
    dihedral: bool = Query(False),
    semidirect: bool = Query(False),
):
    """
    Classify Z_m / D_m (pass m) or Z_r x Z_s / (Z_r x Z_s) x| Z_2 (pass r and s).
    """
    return run_report(lambda: classification_report(n, group_from(m, r, s, dihedral, semidirect)))


@router.get("/enumerate", response_model=Envelope)
def enumerate_endpoint(
    n: int = Query(...),
    max_order: int = Query(..., description="Largest m (and s) to list"),
):
    return run_report(lambda: enumerate_report(n, max_order))


@router.post("/check-perm", response_model=Envelope)
def check_perm_endpoint(body: PermRequest):
    """
    Realizability of one automorphism given in cycle notation, e.g. "(v1 w1 v2 w2 v3 w3)".
    """
    return run_report(lambda: permutation_report(body.n, body.perm))


@router.get("/health")
def health():
    return {"status": "ok"}
