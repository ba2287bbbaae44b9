from enum import Enum
from typing import Iterable, Tuple

from services.bipartite import Part, VertexId


class Embeddability(str, Enum):
    PROPER_SUBSET = "ProperSubset"
    FULL_CIRCLE_ONLY = "FullCircleOnly"
    NO = "No"


def circle_embeddable(a: int, b: int) -> Embeddability:
    """How K_{a,b} sits in a circle: in an arc, only as the whole circle, or not at all."""
    if a < 0 or b < 0:
        raise ValueError(f"Vertex counts must be non-negative, got ({a}, {b})")
    if min(a, b) == 0 or (a, b) in ((1, 1), (1, 2), (2, 1)):
        return Embeddability.PROPER_SUBSET
    if (a, b) == (2, 2):
        return Embeddability.FULL_CIRCLE_ONLY
    return Embeddability.NO


def part_counts(vertices: Iterable[VertexId]) -> Tuple[int, int]:
    """(#V, #W) among the given vertices; these span K_{a,b} inside K_{n,n}."""
    vertices = list(vertices)
    a = sum(1 for v in vertices if v.part == Part.V)
    return a, len(vertices) - a
