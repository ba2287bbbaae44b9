import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Optional, Union

from utils.errors import InvalidParams

Turn = Fraction
Rational = Union[int, str, Fraction]

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


def turn(value: Rational) -> Fraction:
    """Reduce an angle measured in turns (1 turn = 2π) into [0, 1)."""
    return Fraction(value) % 1


def format_turn(value: Fraction) -> str:
    return str(value)


@dataclass(frozen=True)
class Motion:
    """
    Element (a, b, flagged) of the dihedral group over (Q/Z)^2.

    ``a`` rotates the first complex coordinate, ``b`` the second one. A flagged
    motion is the rotation (a, b) applied after φ, the simultaneous complex
    conjugation of both coordinates.
    """

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    flagged: bool = False

    def __post_init__(self):
        object.__setattr__(self, "a", turn(self.a))
        object.__setattr__(self, "b", turn(self.b))
        object.__setattr__(self, "flagged", bool(self.flagged))

    def __mul__(self, other: "Motion") -> "Motion":
        return compose(self, other)

    def __pow__(self, power: int) -> "Motion":
        if self.flagged:
            return self if power % 2 else IDENTITY
        return Motion(self.a * power, self.b * power)

    def __str__(self) -> str:
        return self.literal()

    @property
    def is_identity(self) -> bool:
        return not self.flagged and self.a == 0 and self.b == 0

    def inverse(self) -> "Motion":
        if self.flagged:
            return self
        return Motion(-self.a, -self.b)

    def strip_flag(self) -> "Motion":
        return Motion(self.a, self.b)

    def sort_key(self):
        return (self.flagged, self.a, self.b)

    def literal(self) -> str:
        return f"rot(a={format_turn(self.a)}, b={format_turn(self.b)}, phi={int(self.flagged)})"


IDENTITY = Motion()
PHI = Motion(0, 0, True)

_LITERAL = re.compile(
    r"^\s*rot\(\s*a\s*=\s*([-0-9/ ]+?)\s*,\s*b\s*=\s*([-0-9/ ]+?)\s*,\s*phi\s*=\s*([01])\s*\)\s*$"
)


def parse_motion(text: str) -> Motion:
    """Parse a literal such as ``rot(a=1/5, b=0, phi=1)``."""
    match = _LITERAL.match(text)
    if not match:
        raise InvalidParams(f"Not a motion literal: {text!r}")
    try:
        a = Fraction(match.group(1).replace(" ", ""))
        b = Fraction(match.group(2).replace(" ", ""))
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParams(f"Bad turn in motion literal {text!r}: {exc}")
    return Motion(a, b, match.group(3) == "1")


def compose(m1: Motion, m2: Motion) -> Motion:
    """Return m1 ⋄ m2, the motion applying m2 first and then m1."""
    if not m1.flagged:
        return Motion(m1.a + m2.a, m1.b + m2.b, m2.flagged)
    return Motion(m1.a - m2.a, m1.b - m2.b, not m2.flagged)


def order(m: Motion) -> int:
    if m.flagged:
        return 2
    return lcm(m.a.denominator, m.b.denominator)


class FixedSetKind(str, Enum):
    ALL = "All"
    EMPTY = "Empty"
    CIRCLE_X = "CircleX"
    CIRCLE_Y = "CircleY"
    AXIS_CIRCLE = "AxisCircle"


@dataclass(frozen=True)
class FixedSet:
    kind: FixedSetKind
    a: Optional[Fraction] = None
    b: Optional[Fraction] = None

    @property
    def is_circle(self) -> bool:
        return self.kind in (FixedSetKind.CIRCLE_X, FixedSetKind.CIRCLE_Y, FixedSetKind.AXIS_CIRCLE)

    def __str__(self) -> str:
        if self.kind == FixedSetKind.AXIS_CIRCLE:
            return f"AxisCircle({format_turn(self.a)}, {format_turn(self.b)})"
        return self.kind.value

    def sort_key(self):
        return (list(FixedSetKind).index(self.kind), self.a or 0, self.b or 0)


ALL = FixedSet(FixedSetKind.ALL)
EMPTY = FixedSet(FixedSetKind.EMPTY)
CIRCLE_X = FixedSet(FixedSetKind.CIRCLE_X)
CIRCLE_Y = FixedSet(FixedSetKind.CIRCLE_Y)


def axis_circle(a: Rational, b: Rational) -> FixedSet:
    """Fixed circle of the flagged motion (a, b, 1); AxisCircle(0, 0) is Z."""
    return FixedSet(FixedSetKind.AXIS_CIRCLE, turn(a), turn(b))


CIRCLE_Z = axis_circle(0, 0)


def fixed_set(m: Motion) -> FixedSet:
    if m.flagged:
        return axis_circle(m.a, m.b)
    if m.a == 0 and m.b == 0:
        return ALL
    if m.b == 0:
        return CIRCLE_Y
    if m.a == 0:
        return CIRCLE_X
    return EMPTY
