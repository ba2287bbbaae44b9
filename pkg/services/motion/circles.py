"""
Rational parametrizations of the fixed circles.

X and Y are parametrized by their own turn. AxisCircle(a, b) is parametrized by
t ↦ (cos 2πt · e^{iπa}, sin 2πt · e^{iπb}), so t = 0 and t = 1/2 sit on X and
t = 1/4, 3/4 sit on Y.
"""
from fractions import Fraction
from typing import List, Optional

from .motion import (
    CIRCLE_X,
    HALF,
    QUARTER,
    FixedSet,
    FixedSetKind,
    Motion,
    Rational,
    axis_circle,
    turn,
)
from .points import Free, OnX, OnY, Point, ZOrbit


def _require_circle(circle: FixedSet) -> None:
    if not circle.is_circle:
        raise ValueError(f"{circle} is not a circle")


def point_on_circle(circle: FixedSet, t: Rational) -> Point:
    _require_circle(circle)
    t = turn(t)
    if circle.kind == FixedSetKind.CIRCLE_X:
        return OnX(t)
    if circle.kind == FixedSetKind.CIRCLE_Y:
        return OnY(t)
    ha, hb = circle.a / 2, circle.b / 2
    if t == 0:
        return OnX(ha)
    if t == QUARTER:
        return OnY(hb)
    if t == HALF:
        return OnX(ha + HALF)
    if t == 3 * QUARTER:
        return OnY(hb + HALF)
    return ZOrbit(t, Motion(ha, hb))


def parameter_of(circle: FixedSet, p: Point) -> Optional[Fraction]:
    """Parameter of p on the circle, or None when p is not on it."""
    _require_circle(circle)
    if isinstance(p, Free):
        return None
    if circle.kind == FixedSetKind.CIRCLE_X:
        return p.t if isinstance(p, OnX) else None
    if circle.kind == FixedSetKind.CIRCLE_Y:
        return p.t if isinstance(p, OnY) else None

    ha, hb = circle.a / 2, circle.b / 2
    if isinstance(p, OnX):
        return {Fraction(0): Fraction(0), HALF: HALF}.get(turn(p.t - ha))
    if isinstance(p, OnY):
        return {Fraction(0): QUARTER, HALF: 3 * QUARTER}.get(turn(p.t - hb))

    da, db = turn(p.rep.a - ha), turn(p.rep.b - hb)
    if da not in (0, HALF) or db not in (0, HALF):
        return None
    if da == 0 and db == 0:
        return p.t
    if da == HALF and db == 0:
        return HALF - p.t
    if da == HALF and db == HALF:
        return HALF + p.t
    return 1 - p.t


def circle_image(m: Motion, circle: FixedSet) -> FixedSet:
    """Image of a fixed set under m (the fixed set of the conjugate)."""
    if circle.kind != FixedSetKind.AXIS_CIRCLE:
        return circle
    if m.flagged:
        return axis_circle(2 * m.a - circle.a, 2 * m.b - circle.b)
    return axis_circle(circle.a + 2 * m.a, circle.b + 2 * m.b)


def meet(first: FixedSet, second: FixedSet) -> List[Point]:
    """Intersection points of two distinct fixed circles."""
    _require_circle(first)
    _require_circle(second)
    if first == second:
        raise ValueError("meet() needs two distinct circles")

    kinds = {first.kind, second.kind}
    if kinds == {FixedSetKind.CIRCLE_X, FixedSetKind.CIRCLE_Y}:
        return []
    if FixedSetKind.CIRCLE_X in kinds or FixedSetKind.CIRCLE_Y in kinds:
        axis = first if first.kind == FixedSetKind.AXIS_CIRCLE else second
        if CIRCLE_X in (first, second):
            return [OnX(axis.a / 2), OnX(axis.a / 2 + HALF)]
        return [OnY(axis.b / 2), OnY(axis.b / 2 + HALF)]

    # two axis circles share X-points when their A-lines agree, Y-points when
    # their B-lines agree, and nothing otherwise
    if first.a == second.a:
        return [OnX(first.a / 2), OnX(first.a / 2 + HALF)]
    if first.b == second.b:
        return [OnY(first.b / 2), OnY(first.b / 2 + HALF)]
    return []


