from typing import Optional

from fastapi import APIRouter, Depends, Query

from auth.auth import require_api_key
from routes.classify_routes import run_report
from services.families import FamilyKind, FamilyParams
from utils.reports import Envelope, construction_report

router = APIRouter(prefix="/api", tags=["Construction"], dependencies=[Depends(require_api_key)])


@router.get("/construct", response_model=Envelope)
def construct_endpoint(
    family: FamilyKind = Query(..., description="g1, g2, g3, j1 or j2"),
    n: int = Query(...),
    m: Optional[int] = Query(None),
    r: Optional[int] = Query(None),
    s: Optional[int] = Query(None),
):
    """
    Build the placement for a family, check the edge conditions and run the subgroup witnesses.
    The report is the same as the CLI construct command.
    """
    return run_report(lambda: construction_report(FamilyParams(family, n, m=m, r=r, s=s)))
