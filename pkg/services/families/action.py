from dataclasses import dataclass, field
from typing import Dict, Tuple

from sympy.combinatorics import Permutation, PermutationGroup

from services.bipartite import BipartiteAutomorphism
from services.motion import PHI, Motion, act, compose, describe_point
from utils.errors import MixedAction, NotAutomorphism, NotBijective, NotFaithful, PlacementDegenerate
from utils.logger import get_logger
from .groups import generator_orders
from .params import FamilyKind
from .placement import Placement

log = get_logger("InducedAction")


@dataclass(frozen=True)
class InducedAction:
    """The automorphism of K_{n,n} induced by every motion of a placement's group."""

    placement: Placement
    images: Tuple[Tuple[Motion, BipartiteAutomorphism], ...]
    image_order: int
    relations: Tuple[Tuple[str, bool], ...] = ()
    _lookup: Dict[Motion, BipartiteAutomorphism] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_lookup", dict(self.images))

    def __getitem__(self, m: Motion) -> BipartiteAutomorphism:
        return self._lookup[m]

    @property
    def faithful(self) -> bool:
        return len({phi.image for _, phi in self.images}) == len(self.images)

    def as_dict(self) -> dict:
        return {
            "group_order": self.placement.group.order,
            "image_order": self.image_order,
            "faithful": self.faithful,
            "relations": dict(self.relations),
        }


def _permutation(placement: Placement, x: Motion, points: Tuple) -> BipartiteAutomorphism:
    n = placement.n
    image = []
    for p in points:
        target = placement.vertex_at(act(x, p))
        if target is None:
            raise PlacementDegenerate(f"{x.literal()} maps {describe_point(p)} off the vertex set")
        image.append(target.to_int(n))
    try:
        return BipartiteAutomorphism(n, tuple(image))
    except (MixedAction, NotBijective) as exc:
        raise NotAutomorphism(f"{x.literal()} does not induce an automorphism: {exc}")


def _relations(placement: Placement, perms: Dict[Motion, BipartiteAutomorphism]) -> Dict[str, bool]:
    group, params = placement.group, placement.params
    identity = BipartiteAutomorphism.identity(placement.n)
    phi = perms[PHI]
    checks = {}
    for name, expected in generator_orders(params).items():
        p = perms[group.generator(name)]
        checks[f"{name}^{expected} = 1"] = (p ** expected) == identity and all(
            (p ** d) != identity for d in range(1, expected) if expected % d == 0
        )
    for name, g in group.generators:
        if not g.flagged:
            p = perms[g]
            checks[f"phi {name} phi = {name}^-1"] = phi * p * phi == p.inverse()
    if params.family in (FamilyKind.J1, FamilyKind.J2):
        g, h = perms[group.generator("g")], perms[group.generator("h")]
        checks["g h = h g"] = g * h == h * g
    return checks


def induced_action(placement: Placement) -> InducedAction:
    """
    Induce the vertex permutation of every motion and check the result is a
    faithful action of the expected abstract group.

    Raises:
        NotAutomorphism: a motion moves some vertices across parts and keeps others.
        NotFaithful: two motions induce the same permutation, the induced map does
            not respect composition, or a relation of the presentation fails.
    """
    group = placement.group
    points = tuple(p for _, p in sorted(placement.vertices, key=lambda item: item[0].to_int(placement.n)))
    perms = {x: _permutation(placement, x, points) for x in group}

    for x in group:
        for name, g in group.generators:
            if perms[compose(x, g)] != perms[x] * perms[g]:
                raise NotFaithful(f"Induced map does not respect {x.literal()} composed with {name}")

    if len({p.image for p in perms.values()}) != group.order:
        raise NotFaithful(f"{group.order} motions induce fewer distinct automorphisms")

    generated = PermutationGroup([Permutation(list(perms[g].image)) for _, g in group.generators])
    image_order = int(generated.order())
    if image_order != group.order:
        raise NotFaithful(f"Induced generators give a group of order {image_order}, expected {group.order}")

    relations = _relations(placement, perms)
    failed = [name for name, ok in relations.items() if not ok]
    if failed:
        raise NotFaithful(f"Relations fail on the induced action: {', '.join(failed)}")

    log.info(f"Induced faithful action of order {image_order} for {placement.params}")
    return InducedAction(placement, tuple((x, perms[x]) for x in group), image_order, tuple(relations.items()))


def vertex_orbits(action: InducedAction, motions=None) -> Tuple[frozenset, ...]:
    """Orbits of the vertices under the given motions (all of the group by default)."""
    n = action.placement.n
    motions = tuple(motions) if motions is not None else tuple(m for m, _ in action.images)
    seen, found = set(), []
    for k in range(2 * n):
        if k in seen:
            continue
        block = frozenset(action[m].image[k] for m in motions) | {k}
        seen |= block
        found.append(block)
    return tuple(found)