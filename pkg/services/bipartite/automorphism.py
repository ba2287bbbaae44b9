import re
from dataclasses import dataclass
from enum import Enum
from math import lcm
from typing import Dict, List, Mapping, Optional, Tuple

from utils.errors import CycleNotationError, MixedAction, NotBijective


class Part(str, Enum):
    V = "v"
    W = "w"


_VERTEX = re.compile(r"^([vwVW])(\d+)$")


@dataclass(frozen=True, order=True)
class VertexId:
    """A vertex of K_{n,n}: its part and 1-based index, printed as "v3" / "w1"."""

    part: Part
    index: int

    def __post_init__(self):
        object.__setattr__(self, "part", Part(self.part))
        if self.index < 1:
            raise ValueError(f"Vertex index must be positive, got {self.index}")

    def __str__(self) -> str:
        return f"{self.part.value}{self.index}"

    def to_int(self, n: int) -> int:
        if self.index > n:
            raise ValueError(f"Vertex {self} out of range for n={n}")
        return self.index - 1 if self.part == Part.V else n + self.index - 1

    @classmethod
    def from_int(cls, n: int, k: int) -> "VertexId":
        if k < n:
            return cls(Part.V, k + 1)
        return cls(Part.W, k - n + 1)

    @classmethod
    def parse(cls, text: str) -> "VertexId":
        match = _VERTEX.match(text.strip())
        if not match or int(match.group(2)) < 1:
            raise CycleNotationError(f"Not a vertex name: {text!r}")
        return cls(Part(match.group(1).lower()), int(match.group(2)))


def all_vertices(n: int) -> List[VertexId]:
    return [VertexId.from_int(n, k) for k in range(2 * n)]


@dataclass(frozen=True)
class BipartiteAutomorphism:
    """
    Permutation of the 2n vertices of K_{n,n} that preserves or swaps the parts.

    Vertices are encoded as integers: v_i ↦ i-1 and w_i ↦ n+i-1. ``swaps_parts``
    is derived from ``image`` when omitted and cross-checked when given.
    """

    n: int
    image: Tuple[int, ...]
    swaps_parts: Optional[bool] = None

    def __post_init__(self):
        image = tuple(self.image)
        object.__setattr__(self, "image", image)
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if len(image) != 2 * self.n or sorted(image) != list(range(2 * self.n)):
            raise NotBijective(f"Image {image} is not a bijection on {2 * self.n} vertices")

        n = self.n
        crossing = sum(1 for k, j in enumerate(image) if (k < n) != (j < n))
        if crossing == 0:
            derived = False
        elif crossing == 2 * n:
            derived = True
        else:
            raise MixedAction(
                f"{crossing} of {2 * n} vertices change part; an automorphism must move all or none"
            )
        if self.swaps_parts is not None and bool(self.swaps_parts) != derived:
            raise MixedAction(f"swaps_parts={self.swaps_parts} disagrees with the image")
        object.__setattr__(self, "swaps_parts", derived)

    def __call__(self, vertex: VertexId) -> VertexId:
        return VertexId.from_int(self.n, self.image[vertex.to_int(self.n)])

    def __mul__(self, other: "BipartiteAutomorphism") -> "BipartiteAutomorphism":
        return self.compose(other)

    def __pow__(self, power: int) -> "BipartiteAutomorphism":
        base = self if power >= 0 else self.inverse()
        result = BipartiteAutomorphism.identity(self.n)
        for _ in range(abs(power)):
            result = result.compose(base)
        return result

    def __str__(self) -> str:
        from .cycle_notation import format_cycles

        return format_cycles(self)

    @classmethod
    def identity(cls, n: int) -> "BipartiteAutomorphism":
        return cls(n, tuple(range(2 * n)), False)

    @property
    def is_identity(self) -> bool:
        return all(k == j for k, j in enumerate(self.image))

    def compose(self, other: "BipartiteAutomorphism") -> "BipartiteAutomorphism":
        """Return self ∘ other, applying other first."""
        if self.n != other.n:
            raise ValueError("Cannot compose automorphisms of different graphs")
        return BipartiteAutomorphism(self.n, tuple(self.image[j] for j in other.image))

    def inverse(self) -> "BipartiteAutomorphism":
        inv = [0] * len(self.image)
        for k, j in enumerate(self.image):
            inv[j] = k
        return BipartiteAutomorphism(self.n, tuple(inv), self.swaps_parts)

    def cycles(self) -> List[Tuple[int, ...]]:
        """All cycles including fixed points, each starting at its least vertex, sorted."""
        seen = [False] * len(self.image)
        found = []
        for start in range(len(self.image)):
            if seen[start]:
                continue
            cycle = []
            k = start
            while not seen[k]:
                seen[k] = True
                cycle.append(k)
                k = self.image[k]
            found.append(tuple(cycle))
        return found

    def fixed_points(self) -> List[int]:
        return [k for k, j in enumerate(self.image) if k == j]

    def as_mapping(self) -> Dict[VertexId, VertexId]:
        return {VertexId.from_int(self.n, k): VertexId.from_int(self.n, j) for k, j in enumerate(self.image)}


def validate_automorphism(n: int, image: Mapping[VertexId, VertexId]) -> BipartiteAutomorphism:
    """
    Build an automorphism of K_{n,n} from a vertex map.

    Raises:
        NotBijective: the map is not defined on every vertex or is not a bijection.
        MixedAction: some vertices stay in their part while others cross.
    """
    encoded = [None] * (2 * n)
    try:
        for source, target in image.items():
            encoded[source.to_int(n)] = target.to_int(n)
    except ValueError as exc:
        raise NotBijective(str(exc))
    if any(k is None for k in encoded):
        missing = [str(VertexId.from_int(n, k)) for k, j in enumerate(encoded) if j is None]
        raise NotBijective(f"Map undefined on {', '.join(missing)}")
    return BipartiteAutomorphism(n, tuple(encoded))


@dataclass(frozen=True)
class CycleStructure:
    """Cycle lengths split by part content; multisets are sorted tuples, fixed points counted apart."""

    v_cycles: Tuple[int, ...] = ()
    w_cycles: Tuple[int, ...] = ()
    mixed_cycles: Tuple[int, ...] = ()
    fixed_v: int = 0
    fixed_w: int = 0

    @property
    def total(self) -> int:
        return sum(self.v_cycles) + sum(self.w_cycles) + sum(self.mixed_cycles) + self.fixed_v + self.fixed_w

    def as_dict(self) -> dict:
        return {
            "v_cycles": list(self.v_cycles),
            "w_cycles": list(self.w_cycles),
            "mixed_cycles": list(self.mixed_cycles),
            "fixed_v": self.fixed_v,
            "fixed_w": self.fixed_w,
        }


def cycle_structure(phi: BipartiteAutomorphism) -> CycleStructure:
    n = phi.n
    v_cycles, w_cycles, mixed = [], [], []
    fixed_v = fixed_w = 0
    for cycle in phi.cycles():
        in_v = sum(1 for k in cycle if k < n)
        if len(cycle) == 1:
            if in_v:
                fixed_v += 1
            else:
                fixed_w += 1
        elif in_v == len(cycle):
            v_cycles.append(len(cycle))
        elif in_v == 0:
            w_cycles.append(len(cycle))
        else:
            mixed.append(len(cycle))
    return CycleStructure(tuple(sorted(v_cycles)), tuple(sorted(w_cycles)), tuple(sorted(mixed)), fixed_v, fixed_w)


def order(phi: BipartiteAutomorphism) -> int:
    return lcm(*(len(cycle) for cycle in phi.cycles()))


def maps_orbits_to_orbits(alpha: BipartiteAutomorphism, beta: BipartiteAutomorphism) -> bool:
    """True when beta carries every alpha-orbit onto an alpha-orbit of the same length."""
    orbits = {frozenset(cycle) for cycle in alpha.cycles()}
    for cycle in orbits:
        if frozenset(beta.image[k] for k in cycle) not in orbits:
            return False
    return True
