"""
Arcs of the fixed circles, in the rational parameter of each circle.

An arc runs from ``start`` for ``length`` turns in the increasing direction, so
the two arcs bounded by a pair {p, q} are (p, q - p) and (q, p - q).
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from services.bipartite import VertexId
from services.motion import FixedSet, format_turn, turn


@dataclass(frozen=True)
class Arc:
    circle: FixedSet
    v: VertexId
    w: VertexId
    start: Fraction
    length: Fraction

    @property
    def end(self) -> Fraction:
        return turn(self.start + self.length)

    @property
    def endpoints(self) -> frozenset:
        return frozenset((self.start, self.end))

    def contains(self, t: Fraction) -> bool:
        """True when t lies strictly inside the arc."""
        return 0 < turn(t - self.start) < self.length

    def interiors_meet(self, other: "Arc") -> bool:
        if self.circle != other.circle:
            return False
        if self.start == other.start:
            return True
        return turn(other.start - self.start) < self.length or turn(self.start - other.start) < other.length

    def as_dict(self) -> dict:
        return {
            "circle": str(self.circle),
            "pair": f"{self.v}-{self.w}",
            "from": format_turn(self.start),
            "to": format_turn(self.end),
        }


def arc_options(circle: FixedSet, v: VertexId, w: VertexId, tv: Fraction, tw: Fraction) -> Tuple[Arc, Arc]:
    return (
        Arc(circle, v, w, tv, turn(tw - tv)),
        Arc(circle, v, w, tw, turn(tv - tw)),
    )


@dataclass(frozen=True)
class ArcAssignment:
    arcs: Tuple[Arc, ...]
    notes: Tuple[str, ...] = ()

    def on(self, circle: FixedSet) -> List[Arc]:
        return [arc for arc in self.arcs if arc.circle == circle]

    def as_dict(self) -> dict:
        return {"arcs": [arc.as_dict() for arc in self.arcs], "notes": list(self.notes)}


Pair = Tuple[VertexId, VertexId, Fraction, Fraction]


def assign_arcs(
    circle: FixedSet,
    pairs: Sequence[Pair],
    vertex_parameters: Iterable[Fraction],
    accept: Optional[Callable[[Arc], bool]] = None,
) -> Optional[List[Arc]]:
    """
    Choose one side for every pair so that no arc contains a vertex and no two
    arcs overlap. Exhaustive backtracking; returns None when no choice works.
    """
    parameters = list(vertex_parameters)
    options: List[List[Arc]] = []
    for v, w, tv, tw in pairs:
        allowed = [
            arc for arc in arc_options(circle, v, w, tv, tw)
            if not any(arc.contains(t) for t in parameters) and (accept is None or accept(arc))
        ]
        if not allowed:
            return None
        options.append(allowed)

    # most constrained pairs first
    order = sorted(range(len(options)), key=lambda k: len(options[k]))
    chosen: Dict[int, Arc] = {}

    def place(depth: int) -> bool:
        if depth == len(order):
            return True
        k = order[depth]
        for arc in options[k]:
            if any(arc.interiors_meet(other) for other in chosen.values()):
                continue
            chosen[k] = arc
            if place(depth + 1):
                return True
            del chosen[k]
        return False

    if not place(0):
        return None
    return [chosen[k] for k in range(len(options))]


def shared_endpoint_notes(arcs: Sequence[Arc]) -> List[str]:
    notes = []
    for i, first in enumerate(arcs):
        for second in arcs[i + 1:]:
            if first.circle == second.circle and first.endpoints & second.endpoints:
                notes.append(
                    f"SharedEndpoint: {first.v}-{first.w} and {second.v}-{second.w} meet on {first.circle}"
                )
    return notes
