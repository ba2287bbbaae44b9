"""Text form of automorphisms: "(v1 w1 v2 w2)(v3 v4)", omitted vertices fixed."""
import re

from utils.errors import CycleNotationError
from .automorphism import BipartiteAutomorphism, VertexId

_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(n: int, text: str) -> BipartiteAutomorphism:
    """
    Parse a product of disjoint cycles over vertex names.

    Raises:
        CycleNotationError: malformed text, unknown or repeated vertices.
        MixedAction: the resulting permutation moves some but not all vertices across parts.
    """
    leftover = _CYCLE.sub("", text)
    if leftover.strip():
        raise CycleNotationError(f"Unexpected text outside cycles: {leftover.strip()!r}")

    image = list(range(2 * n))
    seen = set()
    for body in _CYCLE.findall(text):
        names = body.split()
        cycle = []
        for name in names:
            vertex = VertexId.parse(name)
            if vertex.index > n:
                raise CycleNotationError(f"Vertex {vertex} out of range for n={n}")
            k = vertex.to_int(n)
            if k in seen:
                raise CycleNotationError(f"Vertex {vertex} appears twice")
            seen.add(k)
            cycle.append(k)
        for pos, k in enumerate(cycle):
            image[k] = cycle[(pos + 1) % len(cycle)]

    return BipartiteAutomorphism(n, tuple(image))


def format_cycles(phi: BipartiteAutomorphism) -> str:
    """Canonical form: nontrivial cycles only, each opened at its least vertex (V before W)."""
    parts = []
    for cycle in phi.cycles():
        if len(cycle) > 1:
            parts.append("(" + " ".join(str(VertexId.from_int(phi.n, k)) for k in cycle) + ")")
    return "".join(parts) or "()"
