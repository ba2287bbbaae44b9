"""
The five hypotheses for extending an invariant vertex placement of K_{n,n} to
an invariant embedding of its edges.

Failures are reported with a witness, never raised.
"""
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Set, Tuple

from services.bipartite import Part, VertexId
from services.families import Placement
from services.motion import (
    CIRCLE_X,
    CIRCLE_Y,
    EMPTY,
    FixedSet,
    Motion,
    MotionGroup,
    act,
    circle_image,
    fixed_set,
    meet,
    parameter_of,
    point_on_circle,
    turn,
)
from utils.logger import get_logger
from .arcs import Arc, ArcAssignment, assign_arcs, shared_endpoint_notes
from .embeddable import Embeddability, circle_embeddable, part_counts

log = get_logger("EdgeConditions")

EIGHTH = Fraction(1, 8)

VertexImages = Dict[Motion, Dict[VertexId, Optional[VertexId]]]


@dataclass(frozen=True)
class ConditionResult:
    number: int
    passed: bool
    checked: int = 0
    witness: Optional[dict] = None
    notes: Tuple[str, ...] = ()

    def as_dict(self) -> dict:
        data = {"condition": self.number, "status": "pass" if self.passed else "fail", "checked": self.checked}
        if self.witness is not None:
            data["witness"] = self.witness
        if self.notes:
            data["notes"] = list(self.notes)
        return data


@dataclass(frozen=True)
class ConditionReport:
    placement: str
    recipe: str
    results: Tuple[ConditionResult, ...]
    arcs: Optional[ArcAssignment] = None

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def result(self, number: int) -> ConditionResult:
        return self.results[number - 1]

    @property
    def failed(self) -> List[int]:
        return [result.number for result in self.results if not result.passed]

    def as_dict(self) -> dict:
        return {
            "placement": self.placement,
            "recipe": self.recipe,
            "passed": self.passed,
            "conditions": [result.as_dict() for result in self.results],
            "arcs": self.arcs.as_dict() if self.arcs is not None else None,
        }


def _vertex_images(placement: Placement) -> VertexImages:
    return {
        x: {v: placement.vertex_at(act(x, p)) for v, p in placement.vertices}
        for x in placement.group
    }


def _pair_fixers(placement: Placement, images: VertexImages) -> Dict[Tuple[VertexId, VertexId], List[Motion]]:
    """Nontrivial motions fixing both ends of each adjacent pair, for pairs that have any."""
    stabilizers: Dict[VertexId, Set[Motion]] = {
        v: {x for x in placement.group.nontrivial() if images[x][v] == v} for v, _ in placement.vertices
    }
    fixers = {}
    for v, _ in placement.part_points(Part.V):
        if not stabilizers[v]:
            continue
        for w, _ in placement.part_points(Part.W):
            common = stabilizers[v] & stabilizers[w]
            if common:
                fixers[(v, w)] = sorted(common, key=Motion.sort_key)
    return fixers


def _check_same_fixed_set(fixers) -> ConditionResult:
    for (v, w), motions in fixers.items():
        sets = {fixed_set(x) for x in motions}
        if len(sets) > 1:
            first = motions[0]
            other = next(x for x in motions if fixed_set(x) != fixed_set(first))
            return ConditionResult(1, False, len(fixers), {
                "pair": f"{v}-{w}",
                "motions": [first.literal(), other.literal()],
                "fixed_sets": [str(fixed_set(first)), str(fixed_set(other))],
            })
    return ConditionResult(1, True, len(fixers))


def _circle_map(f: Motion, circle: FixedSet) -> Optional[Tuple[str, Fraction]]:
    """f restricted to a circle it preserves: ("shift", c) is t+c, ("reflect", c) is c-t."""
    if circle_image(f, circle) != circle:
        return None
    c0 = parameter_of(circle, act(f, point_on_circle(circle, 0)))
    c1 = parameter_of(circle, act(f, point_on_circle(circle, EIGHTH)))
    if c0 is None or c1 is None:
        return None
    if turn(c1 - c0) == EIGHTH:
        return "shift", c0
    if turn(c0 - c1) == EIGHTH:
        return "reflect", c0
    return None


def _maps_onto_itself(f: Motion, arc: Arc) -> bool:
    restricted = _circle_map(f, arc.circle)
    if restricted is None:
        return False
    kind, c = restricted
    start = turn(arc.start + c) if kind == "shift" else turn(c - arc.start - arc.length)
    return start == arc.start


def _triggers(f: Motion, arc: Arc) -> bool:
    """f preserves the endpoint pair or fixes a point inside the arc."""
    circle = arc.circle
    ends = {point_on_circle(circle, arc.start), point_on_circle(circle, arc.end)}
    if {act(f, p) for p in ends} == ends:
        return True
    fs = fixed_set(f)
    if fs == circle:
        return True
    if not fs.is_circle:
        return False
    return any(arc.contains(parameter_of(circle, p)) for p in meet(circle, fs))


def _arc_violation(group: MotionGroup, arc: Arc) -> Optional[Motion]:
    for f in group.nontrivial():
        if _triggers(f, arc) and not _maps_onto_itself(f, arc):
            return f
    return None


def _circle_pairs(fixers) -> Dict[FixedSet, List[Tuple[VertexId, VertexId]]]:
    by_circle = defaultdict(list)
    for pair, motions in fixers.items():
        for circle in sorted({fixed_set(x) for x in motions}, key=FixedSet.sort_key):
            by_circle[circle].append(pair)
    return dict(sorted(by_circle.items(), key=lambda item: item[0].sort_key()))


def _check_arcs(placement: Placement, fixers) -> Tuple[ConditionResult, ConditionResult, Optional[ArcAssignment]]:
    group = placement.group
    chosen: List[Arc] = []
    failure = None
    by_circle = _circle_pairs(fixers)
    for circle, pairs in by_circle.items():
        on_circle = [parameter_of(circle, p) for _, p in placement.vertices]
        on_circle = [t for t in on_circle if t is not None]
        entries = [
            (v, w, parameter_of(circle, placement.point(v)), parameter_of(circle, placement.point(w)))
            for v, w in pairs
        ]
        arcs = assign_arcs(circle, entries, on_circle, accept=lambda arc: _arc_violation(group, arc) is None)
        if arcs is None:
            arcs = assign_arcs(circle, entries, on_circle)
        if arcs is None:
            failure = failure or {"circle": str(circle), "pairs": [f"{v}-{w}" for v, w in pairs]}
            continue
        chosen.extend(arcs)

    notes = tuple(shared_endpoint_notes(chosen))
    total_pairs = sum(len(pairs) for pairs in by_circle.values())
    second = ConditionResult(2, failure is None, total_pairs, failure, notes)

    third = ConditionResult(3, True, len(chosen) * (group.order - 1))
    for arc in chosen:
        f = _arc_violation(group, arc)
        if f is not None:
            third = ConditionResult(3, False, third.checked, {
                "arc": arc.as_dict(),
                "motion": f.literal(),
            })
            break

    assignment = ArcAssignment(tuple(chosen), notes) if failure is None else None
    return second, third, assignment


def _interchanged_pairs(placement: Placement, images) -> List[Tuple[VertexId, VertexId]]:
    found = []
    for v, _ in placement.part_points(Part.V):
        w = images[v]
        if w is not None and w.part == Part.W and images[w] == v:
            found.append((v, w))
    return found


def _unique_by_axis(group: MotionGroup, g: Motion) -> bool:
    """Uniqueness of fix(g) read off the shape of the group instead of a scan."""
    fs = fixed_set(g)
    if g.flagged:
        # a flagged motion is determined by its axis circle
        return Motion(fs.a, fs.b, True) == g
    if fs == CIRCLE_X:
        return sum(1 for x in group.nontrivial() if not x.flagged and x.a == 0) == 1
    if fs == CIRCLE_Y:
        return sum(1 for x in group.nontrivial() if not x.flagged and x.b == 0) == 1
    return False


def _check_interchanges(placement: Placement, images: VertexImages) -> Tuple[ConditionResult, ConditionResult]:
    group = placement.group
    fourth, fifth = None, None
    swappers = 0
    for g in group.nontrivial():
        pairs = _interchanged_pairs(placement, images[g])
        if not pairs:
            continue
        swappers += 1
        v, w = pairs[0]

        fixed = [u for u, image in images[g].items() if image == u]
        a, b = part_counts(fixed)
        if fourth is None and circle_embeddable(a, b) != Embeddability.PROPER_SUBSET:
            fourth = ConditionResult(4, False, 0, {
                "motion": g.literal(), "pair": f"{v}-{w}", "fixed_subgraph": [a, b],
            })

        fs = fixed_set(g)
        sharing = [x for x in group if x != g and fixed_set(x) == fs]
        unique = fs != EMPTY and not sharing
        if fifth is None and not unique:
            witness = {"motion": g.literal(), "pair": f"{v}-{w}", "fixed_set": str(fs)}
            if sharing:
                witness["shared_with"] = sharing[0].literal()
            fifth = ConditionResult(5, False, 0, witness)
        elif fifth is None and fs != EMPTY and unique != _unique_by_axis(group, g):
            log.error(f"Fixed-set scan and axis shape disagree for {g.literal()} in {placement.params}")
            fifth = ConditionResult(5, False, 0, {
                "motion": g.literal(), "fixed_set": str(fs), "reason": "scan and axis shape disagree",
            })

    fourth = ConditionResult(4, fourth.passed, swappers, fourth.witness) if fourth else ConditionResult(4, True, swappers)
    fifth = ConditionResult(5, fifth.passed, swappers, fifth.witness) if fifth else ConditionResult(5, True, swappers)
    return fourth, fifth


def check_conditions(placement: Placement) -> ConditionReport:
    """Check the five extension hypotheses on a placement; every V-W pair is adjacent."""
    images = _vertex_images(placement)
    fixers = _pair_fixers(placement, images)

    first = _check_same_fixed_set(fixers)
    second, third, arcs = _check_arcs(placement, fixers)
    fourth, fifth = _check_interchanges(placement, images)

    report = ConditionReport(str(placement.params), placement.recipe, (first, second, third, fourth, fifth), arcs)
    if report.passed:
        log.info(f"All extension conditions hold for {placement.params} ({placement.recipe})")
    else:
        log.warning(f"Conditions {report.failed} fail for {placement.params} ({placement.recipe})")
    return report
