"""
Re-embedding witnesses: designated edges whose orbits pin down enough of
K_{n,n} that every automorphism respecting them fixes a subgraph that does not
fit in a circle.

Two independent searches back the same verdict. ``subgroup_witness`` runs a
backtracking search over all automorphisms that fix the first edge's ends;
``restricted_witness_search`` enumerates only permutations inside each
(orbit, part) class of the subgroup.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import permutations, product
from math import factorial, prod
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from config.config import RESTRICTED_SEARCH_LIMIT, WITNESS_MAX_VERTICES
from services.bipartite import Part, VertexId
from services.classify import Equality, GroupSpec, classify_group
from services.families import FamilyKind, InducedAction, Placement, induced_action, vertex_orbits
from services.motion import IDENTITY, PHI, QUARTER, Free, Motion, OnX, OnY, Point, ZOrbit, act, compose, describe_point
from utils.errors import EnumerationTooLarge, InvalidParams, PlacementDegenerate, WitnessFailed
from utils.logger import get_logger
from .embeddable import Embeddability, circle_embeddable

log = get_logger("SubgroupWitness")

Edge = Tuple[VertexId, VertexId]
EdgeKey = Tuple[int, int]


class WitnessStatus(str, Enum):
    PASSED = "Passed"
    FAILED = "Failed"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class WitnessReport:
    target: str
    status: WitnessStatus
    reason: str = ""
    scheme: str = ""
    subgroup_order: int = 0
    edges: Tuple[Edge, ...] = ()
    orbit_sizes: Tuple[int, ...] = ()
    examined: int = 0
    commonly_fixed: Tuple[VertexId, ...] = ()
    fixed_subgraph: Optional[Tuple[int, int]] = None
    corollary: Optional[bool] = None
    counterexample: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == WitnessStatus.PASSED

    def as_dict(self) -> dict:
        return {
            "target": self.target,
            "status": self.status.value,
            "reason": self.reason,
            "scheme": self.scheme,
            "subgroup_order": self.subgroup_order,
            "edges": [f"{v}-{w}" for v, w in self.edges],
            "orbit_sizes": list(self.orbit_sizes),
            "examined": self.examined,
            "commonly_fixed": [str(v) for v in self.commonly_fixed],
            "fixed_subgraph": list(self.fixed_subgraph) if self.fixed_subgraph else None,
            "corollary": self.corollary,
            "counterexample": self.counterexample,
        }


@dataclass(frozen=True)
class _Setup:
    action: InducedAction
    target: GroupSpec
    subgroup: Tuple[Motion, ...]
    scheme: str
    edges: Tuple[Edge, ...]
    labels: Dict[EdgeKey, int]
    orbit_sizes: Tuple[int, ...]
    corollary: Optional[bool]


def _is_product_only(placement: Placement) -> bool:
    """Cases where only the rotation subgroup is known to be a full symmetry group."""
    p = placement.params
    if p.family == FamilyKind.J2:
        return p.s == 4 and p.n == 6
    return p.family == FamilyKind.J1 and p.r == 4 and p.s == 4 and p.n == 10


def _vertex(placement: Placement, p: Point) -> VertexId:
    v = placement.vertex_at(p)
    if v is None:
        raise PlacementDegenerate(f"No vertex at {describe_point(p)} in {placement.params}")
    return v


def _edge(a: VertexId, b: VertexId) -> Edge:
    if a.part == b.part:
        raise PlacementDegenerate(f"{a} and {b} lie in the same part")
    return (a, b) if a.part == Part.V else (b, a)


def _step_edge(placement: Placement, v: VertexId, step: Motion) -> Edge:
    return _edge(v, _vertex(placement, act(step, placement.point(v))))


def _first_z_vertex(placement: Placement) -> Optional[VertexId]:
    return next((v for v, p in placement.part_points(Part.V) if isinstance(p, ZOrbit)), None)


def _free_star(placement: Placement) -> Optional[List[Edge]]:
    """Edges from Free(0) to every W-vertex of its orbit, or of the first free W-orbit."""
    free = [(v, p) for v, p in placement.vertices if isinstance(p, Free)]
    if not free:
        return None
    center = _vertex(placement, Free(0))
    targets = [v for v, p in free if p.orbit_id == 0 and v.part == Part.W]
    if not targets:
        other = min(p.orbit_id for v, p in free if v.part == Part.W)
        targets = [v for v, p in free if p.orbit_id == other]
    return [_edge(center, w) for w in sorted(targets)]


def _designated_edges(placement: Placement, product_only: bool) -> Tuple[str, Optional[List[Edge]], str]:
    """(scheme, edges, reason); edges is None when the construction has no witness for this target."""
    params, group = placement.params, placement.group
    family, m, n = params.family, params.m, params.n

    if product_only:
        v = _first_z_vertex(placement)
        g, h = group.generator("g"), group.generator("h")
        step = h if family == FamilyKind.J2 else compose(g, h)
        y = _vertex(placement, OnY(QUARTER))
        return "rotation-subgroup", [_step_edge(placement, v, step), _edge(v, y)], ""

    if family == FamilyKind.G1:
        v0 = _vertex(placement, Free(0))
        if m >= 3:
            ws = [_vertex(placement, Free(0, Motion(0, Fraction(i, m), True))) for i in range(3)]
            return "g1-three-edges", [_edge(v0, w) for w in ws], ""
        w0 = _vertex(placement, Free(0, PHI))
        w1 = _vertex(placement, Free(0, Motion(0, Fraction(1, 2), True)))
        if n % 2 == 0:
            return "g1-m2-cross-orbit", [_edge(v0, w0), _edge(v0, w1), _edge(w0, _vertex(placement, Free(1)))], ""
        axis = _vertex(placement, OnX(Fraction(1, 8)))
        return "g1-m2-axis", [_edge(v0, w0), _edge(v0, w1), _edge(w0, axis)], ""

    if family == FamilyKind.G2:
        if m == 2:
            return "", None, "for m = 2 this n is handled by the G1 construction"
        h = group.generator("h")
        if m == 4:
            p = _vertex(placement, Free(0))
            return "g2-m4", [_step_edge(placement, p, h), _step_edge(placement, p, compose(PHI, h))], ""
        return "z-cycle", [_step_edge(placement, _first_z_vertex(placement), h)], ""

    if family == FamilyKind.G3:
        if m == 4:
            return "", None, "for m = 4 this n is handled by the G1 construction"
        return "z-cycle", [_step_edge(placement, _first_z_vertex(placement), group.generator("j"))], ""

    star = _free_star(placement)
    if star:
        return "free-star", star, ""
    v = _first_z_vertex(placement)
    if v is not None and params.s > 4:
        g, h = group.generator("g"), group.generator("h")
        step = h if family == FamilyKind.J2 else compose(g, h)
        return "z-cycle", [_step_edge(placement, v, step)], ""
    return "", None, f"no witness edges for recipe {placement.recipe}"


def _key(a: int, b: int) -> EdgeKey:
    return (a, b) if a < b else (b, a)


def _edge_orbit(action: InducedAction, motions: Sequence[Motion], edge: Edge) -> FrozenSet[EdgeKey]:
    n = action.placement.n
    a, b = edge[0].to_int(n), edge[1].to_int(n)
    return frozenset(_key(action[x].image[a], action[x].image[b]) for x in motions)


def _not_applicable(target: GroupSpec, reason: str, scheme: str = "") -> WitnessReport:
    return WitnessReport(str(target), WitnessStatus.NOT_APPLICABLE, reason=reason, scheme=scheme)


def _prepare(placement: Placement, target: Optional[GroupSpec], action: Optional[InducedAction]):
    params = placement.params
    target = target or params.target
    if 2 * params.n > WITNESS_MAX_VERTICES:
        raise EnumerationTooLarge(
            f"K_{{{params.n},{params.n}}} has {2 * params.n} vertices, witness search stops at {WITNESS_MAX_VERTICES}"
        )

    if target not in (params.target, params.rotation_target):
        raise InvalidParams(f"{target} is neither {params.target} nor {params.rotation_target} for {params}")
    if classify_group(params.n, target).equality == Equality.OPEN:
        return _not_applicable(target, f"whether {target} is a full symmetry group of K_{{{params.n},{params.n}}} is open")

    product_only = target == params.rotation_target and _is_product_only(placement)
    scheme, edges, reason = _designated_edges(placement, product_only)
    if edges is None:
        return _not_applicable(target, reason)

    action = action or induced_action(placement)
    group = placement.group
    subgroup = tuple(group.rotation_subgroup()) if product_only else tuple(group)

    orbits = [_edge_orbit(action, subgroup, e) for e in edges]
    labels: Dict[EdgeKey, int] = {}
    for k, block in enumerate(orbits):
        for key in block:
            labels.setdefault(key, k)

    n = params.n
    a, b = edges[0][0].to_int(n), edges[0][1].to_int(n)
    corollary = not any(
        action[x].image[a] == a and action[x].image[b] == b for x in subgroup if x != IDENTITY
    )

    setup = _Setup(action, target, subgroup, scheme, tuple(edges), labels, tuple(len(o) for o in orbits), corollary)
    if len(set(orbits)) != len(orbits):
        return _report(setup, WitnessStatus.FAILED, "designated edges share an orbit", 0, None, None)
    return setup


def _report(setup: _Setup, status: WitnessStatus, reason: str, examined: int,
            common: Optional[set], counterexample: Optional[str]) -> WitnessReport:
    n = setup.action.placement.n
    fixed = tuple(VertexId.from_int(n, k) for k in sorted(common)) if common is not None else ()
    counts = None
    if common is not None:
        a = sum(1 for k in common if k < n)
        counts = (a, len(common) - a)
    return WitnessReport(
        target=str(setup.target),
        status=status,
        reason=reason,
        scheme=setup.scheme,
        subgroup_order=len(setup.subgroup),
        edges=setup.edges,
        orbit_sizes=setup.orbit_sizes,
        examined=examined,
        commonly_fixed=fixed,
        fixed_subgraph=counts,
        corollary=setup.corollary,
        counterexample=counterexample,
    )


def _format_image(n: int, image: Sequence[int]) -> str:
    moved = [f"{VertexId.from_int(n, k)}->{VertexId.from_int(n, j)}" for k, j in enumerate(image) if k != j]
    return ", ".join(moved) or "identity"


def _evaluate(setup: _Setup, candidates: Iterator[Tuple[int, ...]]) -> WitnessReport:
    n = setup.action.placement.n
    examined, common = 0, None
    for image in candidates:
        examined += 1
        if examined > RESTRICTED_SEARCH_LIMIT:
            raise EnumerationTooLarge(f"More than {RESTRICTED_SEARCH_LIMIT} automorphisms respect the witness edges")
        fixed = {k for k, j in enumerate(image) if k == j}
        common = fixed if common is None else common & fixed
        a = sum(1 for k in fixed if k < n)
        if circle_embeddable(a, len(fixed) - a) != Embeddability.NO:
            return _report(setup, WitnessStatus.FAILED,
                           f"an automorphism fixes only K_{{{a},{len(fixed) - a}}}", examined, fixed,
                           _format_image(n, image))

    if setup.corollary is False:
        return _report(setup, WitnessStatus.FAILED, "the first edge is fixed by a nontrivial motion",
                       examined, common, None)
    return _report(setup, WitnessStatus.PASSED, "", examined, common, None)


def _respects(labels: Dict[EdgeKey, int], n: int, image: Sequence[int], x: int, others: Sequence[int]) -> bool:
    for y in others:
        if (x < n) == (y < n):
            continue
        if labels.get(_key(x, y), -1) != labels.get(_key(image[x], image[y]), -1):
            return False
    return True


def _backtrack(setup: _Setup) -> Iterator[Tuple[int, ...]]:
    """Every part-preserving automorphism fixing the first edge's ends and each edge orbit."""
    n = setup.action.placement.n
    labels = setup.labels
    anchor = tuple(v.to_int(n) for v in setup.edges[0])
    degree = [0] * (2 * n)
    for a, b in labels:
        degree[a] += 1
        degree[b] += 1
    rest = sorted((k for k in range(2 * n) if k not in anchor), key=lambda k: (-degree[k], k))
    order = list(anchor) + rest

    image = [-1] * (2 * n)
    used = [False] * (2 * n)
    assigned: List[int] = []

    def extend(depth: int) -> Iterator[Tuple[int, ...]]:
        if depth == len(order):
            yield tuple(image)
            return
        x = order[depth]
        if x in anchor:
            candidates = [x]
        else:
            candidates = range(n) if x < n else range(n, 2 * n)
        for c in candidates:
            if used[c]:
                continue
            image[x], used[c] = c, True
            if _respects(labels, n, image, x, assigned):
                assigned.append(x)
                yield from extend(depth + 1)
                assigned.pop()
            image[x], used[c] = -1, False

    yield from extend(0)


def _finish(report: WitnessReport, label: str) -> WitnessReport:
    if report.status == WitnessStatus.FAILED:
        log.warning(f"{label} witness for {report.target} failed: {report.reason}")
        raise WitnessFailed(f"Witness for {report.target} failed: {report.reason}", report)
    log.info(f"{label} witness for {report.target}: {report.status.value} after {report.examined} automorphisms")
    return report


def subgroup_witness(placement: Placement, target: Optional[GroupSpec] = None,
                     action: Optional[InducedAction] = None) -> WitnessReport:
    """
    Check that every automorphism of K_{n,n} fixing the first designated edge
    and each designated edge orbit fixes a subgraph that does not embed in a circle.

    target defaults to the abstract type of the whole group of motions; the type
    of its rotation subgroup is also accepted.

    Raises:
        EnumerationTooLarge: K_{n,n} has more than WITNESS_MAX_VERTICES vertices.
        InvalidParams: target is not one of the two types above.
        WitnessFailed: a counterexample was found; the report is attached.
    """
    setup = _prepare(placement, target, action)
    if isinstance(setup, WitnessReport):
        return _finish(setup, "Backtracking")
    return _finish(_evaluate(setup, _backtrack(setup)), "Backtracking")


def restricted_witness_search(placement: Placement, target: Optional[GroupSpec] = None,
                              action: Optional[InducedAction] = None) -> WitnessReport:
    """Same verdict as subgroup_witness, enumerating permutations inside each (orbit, part) class."""
    setup = _prepare(placement, target, action)
    if isinstance(setup, WitnessReport):
        return _finish(setup, "Restricted")

    n = placement.n
    classes = [
        sorted(block & part)
        for block in vertex_orbits(setup.action, setup.subgroup)
        for part in (frozenset(range(n)), frozenset(range(n, 2 * n)))
        if block & part
    ]
    size = prod(factorial(len(c)) for c in classes)
    if size > RESTRICTED_SEARCH_LIMIT:
        raise EnumerationTooLarge(f"Restricted search needs {size} permutations, limit is {RESTRICTED_SEARCH_LIMIT}")

    anchor = [v.to_int(n) for v in setup.edges[0]]
    labels = setup.labels

    def candidates() -> Iterator[Tuple[int, ...]]:
        for choice in product(*(permutations(c) for c in classes)):
            image = list(range(2 * n))
            for block, perm in zip(classes, choice):
                for k, j in zip(block, perm):
                    image[k] = j
            if any(image[k] != k for k in anchor):
                continue
            if all(labels.get(_key(image[a], image[b]), -1) == label for (a, b), label in labels.items()):
                yield tuple(image)

    return _finish(_evaluate(setup, candidates()), "Restricted")
