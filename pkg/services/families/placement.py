"""
Vertex placements for the five groups of motions.

Special vertices (on X, Y or a Z-orbit) come first in each part, then the free
orbits, so v1/w1 always name the vertices the constructions talk about.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from services.bipartite import Part, VertexId
from services.motion import (
    HALF,
    QUARTER,
    Free,
    Motion,
    MotionGroup,
    OnX,
    OnY,
    Point,
    ZOrbit,
    act,
    describe_point,
    format_turn,
    orbit,
    stabilizer,
)
from utils.errors import CongruenceMismatch, DegenerateZBase, PlacementDegenerate
from utils.logger import get_logger
from .groups import build_group
from .params import FamilyKind, FamilyParams

log = get_logger("Placement")

Z_CANDIDATES = 64

PartRule = Callable[[Motion], Part]


@dataclass(frozen=True)
class Placement:
    """Points of S^3 for the 2n vertices, invariant under the group."""

    group: MotionGroup
    params: FamilyParams
    vertices: Tuple[Tuple[VertexId, Point], ...]
    recipe: str = "custom"
    base_parameters: Tuple[Tuple[str, str], ...] = ()
    _points: Dict[VertexId, Point] = field(init=False, repr=False, compare=False)
    _vertices: Dict[Point, VertexId] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_points", dict(self.vertices))
        object.__setattr__(self, "_vertices", {p: v for v, p in self.vertices})

    @classmethod
    def from_parts(
        cls,
        group: MotionGroup,
        params: FamilyParams,
        v_points: Sequence[Point],
        w_points: Sequence[Point],
        recipe: str = "custom",
        base_parameters: Iterable[Tuple[str, str]] = (),
    ) -> "Placement":
        pairs = [(VertexId(Part.V, k + 1), p) for k, p in enumerate(v_points)]
        pairs += [(VertexId(Part.W, k + 1), p) for k, p in enumerate(w_points)]
        placement = cls(group, params, tuple(pairs), recipe, tuple(base_parameters))
        placement.validate()
        return placement

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def part_counts(self) -> Tuple[int, int]:
        nv = sum(1 for v, _ in self.vertices if v.part == Part.V)
        return nv, len(self.vertices) - nv

    def point(self, vertex: VertexId) -> Point:
        return self._points[vertex]

    def vertex_at(self, p: Point) -> Optional[VertexId]:
        return self._vertices.get(p)

    def part_points(self, part: Part) -> List[Tuple[VertexId, Point]]:
        return [(v, p) for v, p in self.vertices if v.part == part]

    def validate(self) -> None:
        """
        Raises:
            PlacementDegenerate: repeated points, wrong part sizes, or a vertex
                whose image under some motion is not a vertex.
        """
        if len(self._vertices) != len(self.vertices):
            raise PlacementDegenerate(f"Two vertices share a point in {self.params}")
        if self.part_counts != (self.n, self.n):
            raise PlacementDegenerate(f"Part sizes {self.part_counts} differ from ({self.n}, {self.n})")
        for name, g in self.group.generators:
            for v, p in self.vertices:
                if act(g, p) not in self._vertices:
                    raise PlacementDegenerate(f"{name} maps {v} at {describe_point(p)} off the vertex set")

    def as_dict(self) -> dict:
        return {
            "params": self.params.as_dict(),
            "recipe": self.recipe,
            "base_parameters": dict(self.base_parameters),
            "group_order": self.group.order,
            "generators": {name: m.literal() for name, m in self.group.generators},
            "vertices": [
                {"vertex": str(v), "point": describe_point(p), "stabilizer_order": len(stabilizer(self.group, p))}
                for v, p in self.vertices
            ],
        }


def _exponent_parity(coordinate: str, modulus: int) -> PartRule:
    """V when the turn of the given coordinate, in units of 1/modulus, is even."""

    def rule(x: Motion) -> Part:
        value = getattr(x, coordinate) * modulus
        return Part.V if int(value) % 2 == 0 else Part.W

    return rule


def _unflagged_in_v(x: Motion) -> Part:
    return Part.W if x.flagged else Part.V


def _all_in(part: Part) -> PartRule:
    return lambda x: part


class PlacementBuilder:
    """Accumulates vertices part by part, checking that every orbit is new and part-consistent."""

    def __init__(self, params: FamilyParams, group: MotionGroup):
        self.params = params
        self.group = group
        self.points: Dict[Part, List[Point]] = {Part.V: [], Part.W: []}
        self.taken: Dict[Point, Part] = {}
        self.base: List[Tuple[str, str]] = []
        self.next_orbit_id = 0

    def add(self, part: Part, p: Point) -> None:
        if p in self.taken:
            raise PlacementDegenerate(f"{describe_point(p)} placed twice")
        self.taken[p] = part
        self.points[part].append(p)

    def add_orbit(self, seed: Point, part_of: PartRule) -> None:
        """Place the whole orbit of seed; the part of x(seed) is part_of(x)."""
        found: Dict[Point, Part] = {}
        for x in self.group:
            q = act(x, seed)
            part = part_of(x)
            if found.setdefault(q, part) != part:
                raise PlacementDegenerate(f"{describe_point(q)} is assigned to both parts")
        for q, part in found.items():
            self.add(part, q)

    def free_orbit(self, part_of: PartRule) -> None:
        self.add_orbit(Free(self.next_orbit_id), part_of)
        self.next_orbit_id += 1

    def free_orbits(self, count: int, part_of: PartRule) -> None:
        for _ in range(count):
            self.free_orbit(part_of)

    def _fresh(self, seed: Point, stabilizer_order: int) -> bool:
        if len(stabilizer(self.group, seed)) != stabilizer_order:
            return False
        return not any(q in self.taken for q in orbit(self.group, seed))

    def z_orbit(self, part_of: PartRule) -> None:
        """Place a generic orbit on the images of Z, whose points are fixed only by id and phi."""
        denominator = 8 * lcm(4, self.group.order)
        for c in range(Z_CANDIDATES):
            t = Fraction(2 * c + 1, denominator)
            try:
                seed = ZOrbit(t)
            except DegenerateZBase:
                continue
            if self._fresh(seed, 2):
                self.base.append(("z_base", format_turn(t)))
                self.add_orbit(seed, part_of)
                return
            log.debug(f"Z base {t} rejected for {self.params}")
        raise PlacementDegenerate(f"No generic Z base among {Z_CANDIDATES} candidates for {self.params}")

    def generic_points(self, make: Callable[[Fraction], Point], label: str, count: int,
                       spacing: Fraction, stabilizer_order: int, part: Part) -> None:
        """Place count orbits of points make(t) with 0 < t < spacing, away from every flagged axis."""
        if count == 0:
            return
        chosen = []
        for c in range(1, 2 * count + 2):
            t = spacing * Fraction(c, 2 * count + 2)
            seed = make(t)
            if self._fresh(seed, stabilizer_order):
                self.add_orbit(seed, _all_in(part))
                chosen.append(t)
                if len(chosen) == count:
                    self.base.append((label, ", ".join(format_turn(t) for t in chosen)))
                    return
        raise PlacementDegenerate(f"Only {len(chosen)} of {count} generic {label} found for {self.params}")

    def build(self, recipe: str) -> Placement:
        placement = Placement.from_parts(
            self.group, self.params, self.points[Part.V], self.points[Part.W], recipe, self.base
        )
        log.info(f"Placed {2 * self.params.n} vertices for {self.params} with recipe {recipe}")
        return placement


def recipe_name(params: FamilyParams) -> str:
    """
    The construction used for params.

    Raises:
        CongruenceMismatch: n is not in a congruence class the family handles.
    """
    n, m, r, s = params.n, params.m, params.r, params.s
    if params.family == FamilyKind.G1:
        eps = n % m
        if eps not in (0, 1, 2):
            raise CongruenceMismatch(f"G1 needs n ≡ 0, 1 or 2 (mod {m}), got n={n}")
        return ("g1-free", "g1-axis-1", "g1-axis-2")[eps]

    if params.family == FamilyKind.G2:
        if n % m != m // 2:
            raise CongruenceMismatch(f"G2 needs n ≡ {m // 2} (mod {m}), got n={n}")
        return "g2-z-cycle"

    if params.family == FamilyKind.G3:
        if n % m != (m // 2 + 2) % m or n < m // 2 + 2:
            raise CongruenceMismatch(f"G3 needs n ≡ {m // 2 + 2} (mod {m}), got n={n}")
        return "g3-z-cycle-y4"

    if params.family == FamilyKind.J2:
        if n % (2 * s) != s + 2:
            raise CongruenceMismatch(f"J2 needs n ≡ {s + 2} (mod {2 * s}), got n={n}")
        return "j2-y4-z"

    if n % s == 0:
        l = (n % (2 * r * s)) // s
        if l == 0:
            return "j1-free"
        if l % 2 == 0:
            return "j1-even-l"
        return "j1-odd-l-even-m" if (s // r) % 2 == 0 else "j1-odd-l-odd-m"
    if r == 2 and n % (2 * s) == 2:
        return "j1-r2-y4"
    if r == 4 and n % (2 * s) == 2:
        return "j1-r4-y4-z" if (n - 2) % (4 * s) == 2 * s else "j1-r4-y4"
    raise CongruenceMismatch(f"J1(r={r}, s={s}) has no construction for n={n}")


def _axis_and_y4(builder: PlacementBuilder) -> None:
    for t, part in ((0, Part.V), (HALF, Part.V), (QUARTER, Part.W), (3 * QUARTER, Part.W)):
        builder.add(part, OnY(t))


def _build_g1(b: PlacementBuilder, recipe: str) -> None:
    params = b.params
    if recipe == "g1-axis-1":
        b.add(Part.V, OnX(Fraction(1, 8)))
        b.add(Part.W, OnX(Fraction(7, 8)))
    elif recipe == "g1-axis-2":
        b.add(Part.V, OnX(Fraction(1, 8)))
        b.add(Part.V, OnX(Fraction(5, 8)))
        b.add(Part.W, OnX(Fraction(7, 8)))
        b.add(Part.W, OnX(Fraction(3, 8)))
    b.free_orbits(params.n // params.m, _unflagged_in_v)


def _build_g2_g3(b: PlacementBuilder, recipe: str) -> None:
    params = b.params
    rule = _exponent_parity("a", params.m)
    remainder = params.m // 2
    if recipe == "g3-z-cycle-y4":
        _axis_and_y4(b)
        remainder += 2
    b.z_orbit(rule)
    b.free_orbits((params.n - remainder) // params.m, rule)


def _build_j1_zero(b: PlacementBuilder, recipe: str) -> None:
    n, r, s = b.params.n, b.params.r, b.params.s
    k, l, ratio = n // (2 * r * s), (n % (2 * r * s)) // s, s // r
    x_spacing, y_spacing = Fraction(1, 2 * s), Fraction(1, 2 * r)

    if recipe == "j1-even-l":
        b.generic_points(OnX, "x_points", l // 2, x_spacing, r, Part.V)
        b.generic_points(OnY, "y_points", l * ratio // 2, y_spacing, s, Part.W)
    elif recipe in ("j1-odd-l-even-m", "j1-odd-l-odd-m"):
        j = (l - 1) // 2
        b.add_orbit(OnX(0), _all_in(Part.V))
        b.generic_points(OnX, "x_points", j, x_spacing, r, Part.V)
        if recipe == "j1-odd-l-odd-m":
            b.add_orbit(OnY(0), _all_in(Part.W))
        b.generic_points(OnY, "y_points", j * ratio + ratio // 2, y_spacing, s, Part.W)

    b.free_orbits(k, _all_in(Part.V))
    b.free_orbits(k, _all_in(Part.W))


def _build_j1_r2(b: PlacementBuilder, recipe: str) -> None:
    b.add(Part.V, OnY(Fraction(1, 8)))
    b.add(Part.V, OnY(Fraction(5, 8)))
    b.add(Part.W, OnY(Fraction(3, 8)))
    b.add(Part.W, OnY(Fraction(7, 8)))
    b.free_orbits((b.params.n - 2) // (2 * b.params.s), _unflagged_in_v)


def _build_j1_r4(b: PlacementBuilder, recipe: str) -> None:
    rule = _exponent_parity("b", 4)
    _axis_and_y4(b)
    if recipe == "j1-r4-y4-z":
        b.z_orbit(rule)
    b.free_orbits((b.params.n - 2) // (4 * b.params.s), rule)


def _build_j2(b: PlacementBuilder, recipe: str) -> None:
    s = b.params.s
    rule = _exponent_parity("a", s)
    _axis_and_y4(b)
    b.z_orbit(rule)
    b.free_orbits((b.params.n - s - 2) // (2 * s), rule)


_RECIPES = {
    "g1-free": _build_g1,
    "g1-axis-1": _build_g1,
    "g1-axis-2": _build_g1,
    "g2-z-cycle": _build_g2_g3,
    "g3-z-cycle-y4": _build_g2_g3,
    "j1-free": _build_j1_zero,
    "j1-even-l": _build_j1_zero,
    "j1-odd-l-even-m": _build_j1_zero,
    "j1-odd-l-odd-m": _build_j1_zero,
    "j1-r2-y4": _build_j1_r2,
    "j1-r4-y4": _build_j1_r4,
    "j1-r4-y4-z": _build_j1_r4,
    "j2-y4-z": _build_j2,
}


def build_placement(params: FamilyParams, group: Optional[MotionGroup] = None) -> Placement:
    """
    Place the 2n vertices for params with the family's construction.

    Raises:
        CongruenceMismatch: n is outside the congruence classes of the family.
        PlacementDegenerate: no valid base parameter was found.
    """
    recipe = recipe_name(params)
    builder = PlacementBuilder(params, group or build_group(params))
    _RECIPES[recipe](builder, recipe)
    return builder.build(recipe)
