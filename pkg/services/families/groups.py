from fractions import Fraction
from typing import List, Tuple

from services.motion import PHI, Motion, MotionGroup, compose, generate, order
from utils.errors import InvalidParams
from utils.logger import get_logger
from .params import FamilyKind, FamilyParams

log = get_logger("Families")


def generators(params: FamilyParams) -> List[Tuple[str, Motion]]:
    m, r, s = params.m, params.r, params.s
    if params.family == FamilyKind.G1:
        gens = [("g", Motion(0, Fraction(1, m)))]
    elif params.family == FamilyKind.G2:
        gens = [("h", Motion(Fraction(1, m), Fraction(2, m)))]
    elif params.family == FamilyKind.G3:
        gens = [("j", Motion(Fraction(1, m), Fraction(1, 4)))]
    elif params.family == FamilyKind.J1:
        gens = [("g", Motion(0, Fraction(1, r))), ("h", Motion(Fraction(1, s), 0))]
    else:
        gens = [("g", Motion(0, Fraction(1, 2))), ("h", Motion(Fraction(1, s), Fraction(1, 4)))]
    return gens + [("phi", PHI)]


def generator_orders(params: FamilyParams) -> dict:
    if params.family in (FamilyKind.G1, FamilyKind.G2, FamilyKind.G3):
        name = {FamilyKind.G1: "g", FamilyKind.G2: "h", FamilyKind.G3: "j"}[params.family]
        return {name: params.m, "phi": 2}
    return {"g": params.r, "h": params.s, "phi": 2}


def build_group(params: FamilyParams) -> MotionGroup:
    """
    Generate the group of motions for a family and check its presentation.

    Raises:
        InvalidParams: wrong order, or a relation of the presentation fails.
    """
    group = generate(generators(params), name=str(params.target))
    if group.order != params.expected_order:
        raise InvalidParams(f"{params} generated {group.order} motions, expected {params.expected_order}")

    for name, expected in generator_orders(params).items():
        got = order(group.generator(name))
        if got != expected:
            raise InvalidParams(f"generator {name} of {params} has order {got}, expected {expected}")

    for x in group:
        if not x.flagged and compose(compose(PHI, x), PHI) != x.inverse():
            raise InvalidParams(f"phi does not invert {x} in {params}")

    if params.family in (FamilyKind.J1, FamilyKind.J2):
        g, h = group.generator("g"), group.generator("h")
        if compose(g, h) != compose(h, g):
            raise InvalidParams(f"g and h do not commute in {params}")

    log.info(f"Built {params.target} of order {group.order} for {params}")
    return group
