from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from utils.errors import DegenerateZBase
from .motion import HALF, QUARTER, Motion, compose, format_turn, turn


@dataclass(frozen=True)
class OnX:
    """Point of the circle X at parameter t."""

    t: Fraction

    def __post_init__(self):
        object.__setattr__(self, "t", turn(self.t))


@dataclass(frozen=True)
class OnY:
    """Point of the circle Y at parameter t."""

    t: Fraction

    def __post_init__(self):
        object.__setattr__(self, "t", turn(self.t))


@dataclass(frozen=True)
class ZOrbit:
    """
    The point rep(z(t)) where z(t) = (cos 2πt, sin 2πt) lies on the circle Z.

    Stored canonically: 0 < t < 1/4 and rep unflagged, so that equal points
    compare equal. Quadrants other than the first are folded into rep by a half
    turn of the coordinate whose sign flips.
    """

    t: Fraction
    rep: Motion = Motion()

    def __post_init__(self):
        t = turn(self.t)
        rep = self.rep.strip_flag()
        if t in (0, QUARTER, HALF, 3 * QUARTER):
            raise DegenerateZBase(f"Z parameter {t} lies on X or Y")
        if t < QUARTER:
            base, da, db = t, 0, 0
        elif t < HALF:
            base, da, db = HALF - t, HALF, 0
        elif t < 3 * QUARTER:
            base, da, db = t - HALF, HALF, HALF
        else:
            base, da, db = 1 - t, 0, HALF
        object.__setattr__(self, "t", base)
        object.__setattr__(self, "rep", Motion(rep.a + da, rep.b + db))


@dataclass(frozen=True)
class Free:
    """Image of the generic point p_orbit_id under rep; the action on these is free."""

    orbit_id: int
    rep: Motion = Motion()


Point = Union[OnX, OnY, ZOrbit, Free]


def act(m: Motion, p: Point) -> Point:
    match p:
        case OnX(t=t):
            return OnX(m.a - t if m.flagged else t + m.a)
        case OnY(t=t):
            return OnY(m.b - t if m.flagged else t + m.b)
        case ZOrbit(t=t, rep=rep):
            # φ fixes Z pointwise, so the flag of m ⋄ rep is dropped
            return ZOrbit(t, compose(m, rep))
        case Free(orbit_id=orbit_id, rep=rep):
            return Free(orbit_id, compose(m, rep))
    raise TypeError(f"Not a point: {p!r}")


def describe_point(p: Point) -> str:
    match p:
        case OnX(t=t):
            return f"OnX({format_turn(t)})"
        case OnY(t=t):
            return f"OnY({format_turn(t)})"
        case ZOrbit(t=t, rep=rep):
            return f"ZOrbit({format_turn(t)}, {rep.literal()})"
        case Free(orbit_id=orbit_id, rep=rep):
            return f"Free({orbit_id}, {rep.literal()})"
    raise TypeError(f"Not a point: {p!r}")


_KIND_RANK = {OnX: 0, OnY: 1, ZOrbit: 2, Free: 3}


def point_sort_key(p: Point):
    match p:
        case OnX(t=t) | OnY(t=t):
            return (_KIND_RANK[type(p)], t, 0, ())
        case ZOrbit(t=t, rep=rep):
            return (2, t, 0, rep.sort_key())
        case Free(orbit_id=orbit_id, rep=rep):
            return (3, 0, orbit_id, rep.sort_key())
    raise TypeError(f"Not a point: {p!r}")
