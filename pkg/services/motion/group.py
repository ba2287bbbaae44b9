from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple, Union

from config.config import MAX_GROUP_ORDER
from utils.errors import SizeBoundExceeded
from utils.logger import get_logger
from .motion import IDENTITY, Motion, compose
from .points import Point, act

log = get_logger("MotionGroup")

Generators = Union[Sequence[Tuple[str, Motion]], Dict[str, Motion]]


@dataclass(frozen=True)
class MotionGroup:
    """A finite group of motions with its named generators. Elements are sorted, identity first."""

    elements: Tuple[Motion, ...]
    generators: Tuple[Tuple[str, Motion], ...] = ()
    name: str = ""
    _members: FrozenSet[Motion] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.elements))

    def __contains__(self, m: Motion) -> bool:
        return m in self._members

    def __iter__(self) -> Iterator[Motion]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Motion:
        return IDENTITY

    def nontrivial(self) -> Tuple[Motion, ...]:
        return self.elements[1:]

    def generator(self, name: str) -> Motion:
        for label, m in self.generators:
            if label == name:
                return m
        raise KeyError(name)

    def rotation_subgroup(self) -> "MotionGroup":
        """The subgroup generated by the unflagged generators."""
        gens = [(label, m) for label, m in self.generators if not m.flagged]
        label = f"rotations of {self.name}" if self.name else "rotations"
        return generate(gens, name=label)


def generate(generators: Generators, bound: int = MAX_GROUP_ORDER, name: str = "") -> MotionGroup:
    """
    Close the generators under composition.

    Raises:
        SizeBoundExceeded: when the closure grows past ``bound`` elements.
    """
    named = list(generators.items()) if isinstance(generators, dict) else list(generators)
    gens = [m for _, m in named]

    seen = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        next_frontier = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    next_frontier.append(y)
                    if len(seen) > bound:
                        raise SizeBoundExceeded(
                            f"Closure of {', '.join(label for label, _ in named)} exceeds {bound} elements"
                        )
        frontier = next_frontier

    elements = tuple(sorted(seen, key=Motion.sort_key))
    log.debug(f"Generated group {name or '?'} of order {len(elements)}")
    return MotionGroup(elements=elements, generators=tuple(named), name=name)


def stabilizer(group: MotionGroup, p: Point) -> Tuple[Motion, ...]:
    return tuple(m for m in group if act(m, p) == p)


def orbit(group: MotionGroup, p: Point) -> List[Point]:
    """Orbit of p, in order of first appearance over the sorted elements."""
    seen = {}
    for m in group:
        q = act(m, p)
        if q not in seen:
            seen[q] = None
    return list(seen)


def orbit_union(group: MotionGroup, points: Iterable[Point]) -> set:
    found = set()
    for p in points:
        found.update(orbit(group, p))
    return found
