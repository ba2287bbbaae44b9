from dataclasses import dataclass
from enum import Enum
from typing import Optional

from services.classify import GroupSpec
from utils.errors import InvalidParams


class FamilyKind(str, Enum):
    G1 = "g1"
    G2 = "g2"
    G3 = "g3"
    J1 = "j1"
    J2 = "j2"


@dataclass(frozen=True)
class FamilyParams:
    """A named group of motions with its parameters and the size n of K_{n,n}."""

    family: FamilyKind
    n: int
    m: Optional[int] = None
    r: Optional[int] = None
    s: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "family", FamilyKind(self.family))
        if self.n < 3:
            raise InvalidParams(f"n must be at least 3, got {self.n}")

        family, m, r, s = self.family, self.m, self.r, self.s
        if family in (FamilyKind.G1, FamilyKind.G2, FamilyKind.G3):
            if m is None or r is not None or s is not None:
                raise InvalidParams(f"{family.value} takes m only")
            if m < 2:
                raise InvalidParams(f"m must be at least 2, got {m}")
            if family == FamilyKind.G2 and m % 2:
                raise InvalidParams(f"G2 needs m even, got {m}")
            if family == FamilyKind.G3 and m % 4:
                raise InvalidParams(f"G3 needs 4 | m, got {m}")
        elif family == FamilyKind.J1:
            if r is None or s is None or m is not None:
                raise InvalidParams("j1 takes r and s")
            if r < 2 or s < 2 or s % r:
                raise InvalidParams(f"J1 needs 2 <= r and r | s, got r={r}, s={s}")
        else:
            if s is None or m is not None:
                raise InvalidParams("j2 takes s only")
            if r not in (None, 2):
                raise InvalidParams(f"J2 has r = 2, got r={r}")
            if s < 4 or s % 4:
                raise InvalidParams(f"J2 needs 4 | s, got s={s}")
            object.__setattr__(self, "r", 2)

    @property
    def target(self) -> GroupSpec:
        """Abstract type of the whole group of motions."""
        if self.family in (FamilyKind.J1, FamilyKind.J2):
            return GroupSpec.product(self.r, self.s, semidirect=True)
        return GroupSpec.dihedral(self.m)

    @property
    def rotation_target(self) -> GroupSpec:
        """Abstract type of the subgroup generated by the unflagged generators."""
        if self.family in (FamilyKind.J1, FamilyKind.J2):
            return GroupSpec.product(self.r, self.s)
        return GroupSpec.cyclic(self.m)

    @property
    def expected_order(self) -> int:
        if self.family == FamilyKind.J1:
            return 2 * self.r * self.s
        if self.family == FamilyKind.J2:
            return 4 * self.s
        return 2 * self.m

    def __str__(self) -> str:
        if self.family == FamilyKind.J1:
            args = f"r={self.r}, s={self.s}"
        elif self.family == FamilyKind.J2:
            args = f"s={self.s}"
        else:
            args = f"m={self.m}"
        return f"{self.family.value.upper()}({args}), n={self.n}"

    def as_dict(self) -> dict:
        data = {"family": self.family.value, "n": self.n}
        for key in ("m", "r", "s"):
            if getattr(self, key) is not None:
                data[key] = getattr(self, key)
        return data
