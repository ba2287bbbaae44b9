"""
Report envelopes shared by the CLI and the HTTP API.

Every report has the same four keys: the query that produced it, the verdict,
the condition ids that matched, and the witnesses backing the verdict.
"""
import json
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from services.bipartite import cycle_structure, format_cycles, order, parse_cycles
from services.classify import GroupSpec, classify_group, describe_condition, enumerate_groups
from services.edgecheck import WitnessStatus, check_conditions, restricted_witness_search, subgroup_witness
from services.families import FamilyParams, build_group, build_placement, induced_action, plan_construction
from services.matrixcheck import verify_so4
from services.oracle import build_oracle_report
from services.realizable import match_cases
from utils.errors import BipartiteTsgError, EnumerationTooLarge, InvalidParams, WitnessFailed
from utils.logger import get_logger

log = get_logger("Reports")


class Envelope(BaseModel):
    query: Dict[str, Any]
    verdict: Any
    matched_conditions: List[str] = Field(default_factory=list)
    witnesses: List[Dict[str, Any]] = Field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), sort_keys=True, indent=2)


class ErrorBody(BaseModel):
    code: str
    message: str


class ErrorEnvelope(BaseModel):
    error: ErrorBody

    @classmethod
    def from_exception(cls, exc: BipartiteTsgError) -> "ErrorEnvelope":
        return cls(error=ErrorBody(code=exc.code, message=str(exc)))

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), sort_keys=True, indent=2)


class EnumerateRow(BaseModel):
    group: str
    order: int
    containment: str
    equality: str
    conditions: List[str]
    note: Optional[str] = None


class PermRequest(BaseModel):
    n: int
    perm: str


def group_from(m: Optional[int] = None, r: Optional[int] = None, s: Optional[int] = None,
               dihedral: bool = False, semidirect: bool = False) -> GroupSpec:
    """Z_m / D_m from m, or a product from r and s."""
    if m is not None and (r is not None or s is not None):
        raise InvalidParams("give either m or r and s, not both")
    if m is not None:
        return GroupSpec.dihedral(m) if dihedral else GroupSpec.cyclic(m)
    if r is None or s is None:
        raise InvalidParams("give m, or both r and s")
    return GroupSpec.product(r, s, semidirect)


def classification_report(n: int, group: GroupSpec) -> Envelope:
    verdict = classify_group(n, group)
    witnesses = [{"condition": c, "statement": describe_condition(c)} for c in verdict.matched_conditions]
    if verdict.contained:
        witnesses.append({"construction": plan_construction(n, group).as_dict()})
    return Envelope(
        query={"n": n, "group": group.as_dict()},
        verdict={
            "containment": verdict.containment.value,
            "equality": verdict.equality.value,
            "normalization_note": verdict.normalization_note,
            "answered_as": str(verdict.answered_as) if verdict.answered_as else None,
        },
        matched_conditions=list(verdict.matched_conditions),
        witnesses=witnesses,
    )


def enumerate_report(n: int, max_order: int) -> Envelope:
    rows = [
        EnumerateRow(
            group=str(group),
            order=group.order,
            containment=verdict.containment.value,
            equality=verdict.equality.value,
            conditions=list(verdict.matched_conditions),
            note=verdict.normalization_note,
        )
        for group, verdict in enumerate_groups(n, max_order)
    ]
    return Envelope(
        query={"n": n, "max_order": max_order},
        verdict={"rows": [row.model_dump() for row in rows], "count": len(rows)},
    )


def permutation_report(n: int, perm: str) -> Envelope:
    phi = parse_cycles(n, perm)
    realizability = match_cases(phi)
    return Envelope(
        query={"n": n, "perm": perm},
        verdict={
            "automorphism": format_cycles(phi),
            "order": order(phi),
            "swaps_parts": phi.swaps_parts,
            "cycle_structure": cycle_structure(phi).as_dict(),
            "realizable": realizability.realizable,
        },
        matched_conditions=[f"case {case_id}" for case_id in realizability.case_ids],
        witnesses=[m.as_dict() for m in realizability.matches]
        + [{"diagnostic": d} for d in realizability.diagnostics],
    )


def _witness_entry(placement, action, target: GroupSpec) -> Dict[str, Any]:
    try:
        report = subgroup_witness(placement, target, action)
    except WitnessFailed as exc:
        return {"search": "backtracking", **exc.report.as_dict()}
    except EnumerationTooLarge as exc:
        return {"target": str(target), "status": "Skipped", "reason": str(exc)}
    entry = {"search": "backtracking", **report.as_dict()}
    if report.status == WitnessStatus.PASSED:
        try:
            entry["restricted_search"] = restricted_witness_search(placement, target, action).status.value
        except WitnessFailed as exc:
            entry["restricted_search"] = exc.report.status.value
        except EnumerationTooLarge:
            entry["restricted_search"] = "Skipped"
    return entry


def construction_report(params: FamilyParams) -> Envelope:
    placement = build_placement(params)
    action = induced_action(placement)
    conditions = check_conditions(placement)
    witnesses = [_witness_entry(placement, action, t) for t in (params.target, params.rotation_target)]

    failed_witness = any(
        w.get("status") == WitnessStatus.FAILED.value or w.get("restricted_search") == WitnessStatus.FAILED.value
        for w in witnesses
    )
    if not conditions.passed or failed_witness:
        log.warning(f"Construction {params} did not verify: conditions {conditions.failed}")
    return Envelope(
        query=params.as_dict(),
        verdict={
            "passed": conditions.passed and action.faithful and not failed_witness,
            "recipe": placement.recipe,
            "group_order": placement.group.order,
            "action": action.as_dict(),
            "failed_conditions": conditions.failed,
        },
        matched_conditions=[f"edge condition ({r.number})" for r in conditions.results if r.passed],
        witnesses=[{"placement": placement.as_dict()}, {"conditions": conditions.as_dict()}] + witnesses,
    )


def plan_report(n: int, group: GroupSpec) -> Envelope:
    plan = plan_construction(n, group)
    return Envelope(
        query={"n": n, "group": group.as_dict()},
        verdict={"recipe": plan.recipe, "params": plan.params.as_dict()},
        matched_conditions=[plan.condition],
        witnesses=[plan.as_dict()],
    )


def oracle_report(max_n: int, max_m: int, workers: int = 1) -> Envelope:
    report = build_oracle_report(max_n, max_m, workers)
    data = report.as_dict()
    return Envelope(
        query={"max_n": max_n, "max_m": max_m},
        verdict={"passed": report.passed, "discrepancies": data["discrepancies"], "counts": data["counts"]},
        witnesses=data["rows"] + [{"diagnostic": d} for d in report.diagnostics],
    )


def so4_report(params: FamilyParams) -> Envelope:
    report = verify_so4(build_group(params))
    return Envelope(
        query={key: value for key, value in params.as_dict().items() if key != "n"},
        verdict=report.as_dict(),
        witnesses=list(report.fixed_set_disagreements),
    )
