from dataclasses import dataclass
from enum import Enum
from math import gcd, lcm
from typing import Optional, Tuple

from utils.errors import InvalidParams, MTooSmall


class Family(str, Enum):
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    PRODUCT = "product"
    SEMIDIRECT = "semidirect"


_RANK = {Family.CYCLIC: 0, Family.DIHEDRAL: 1, Family.PRODUCT: 2, Family.SEMIDIRECT: 3}


def normalize_rs(r: int, s: int) -> Tuple[int, int, Optional[str]]:
    """Rewrite Z_r x Z_s as Z_gcd x Z_lcm; the note is set when anything changed or r' = 1."""
    if r < 1 or s < 1:
        raise InvalidParams(f"r and s must be positive, got r={r}, s={s}")
    r2, s2 = gcd(r, s), lcm(r, s)
    note = None
    if (r2, s2) != (r, s):
        note = f"Z_{r} x Z_{s} rewritten as Z_{r2} x Z_{s2}"
    if r2 == 1:
        note = f"{note}; reduces to cyclic" if note else "reduces to cyclic"
    return r2, s2, note


@dataclass(frozen=True)
class GroupSpec:
    """One of Z_m, D_m, Z_r x Z_s or (Z_r x Z_s) x| Z_2; product parameters are stored with r | s."""

    family: Family
    m: Optional[int] = None
    r: Optional[int] = None
    s: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.is_product:
            if self.r is None or self.s is None or self.m is not None:
                raise InvalidParams(f"{self.family.value} needs r and s")
            r, s, _ = normalize_rs(self.r, self.s)
            object.__setattr__(self, "r", r)
            object.__setattr__(self, "s", s)
        else:
            if self.m is None or self.r is not None or self.s is not None:
                raise InvalidParams(f"{self.family.value} needs m")
            if self.m < 2:
                raise MTooSmall(f"m must be at least 2, got {self.m}")

    @classmethod
    def cyclic(cls, m: int) -> "GroupSpec":
        return cls(Family.CYCLIC, m=m)

    @classmethod
    def dihedral(cls, m: int) -> "GroupSpec":
        return cls(Family.DIHEDRAL, m=m)

    @classmethod
    def product(cls, r: int, s: int, semidirect: bool = False) -> "GroupSpec":
        return cls(Family.SEMIDIRECT if semidirect else Family.PRODUCT, r=r, s=s)

    @property
    def is_product(self) -> bool:
        return self.family in (Family.PRODUCT, Family.SEMIDIRECT)

    @property
    def semidirect(self) -> bool:
        return self.family == Family.SEMIDIRECT

    @property
    def order(self) -> int:
        if self.family == Family.CYCLIC:
            return self.m
        if self.family == Family.DIHEDRAL:
            return 2 * self.m
        base = self.r * self.s
        return 2 * base if self.semidirect else base

    def parameters(self) -> Tuple[int, ...]:
        return (self.r, self.s) if self.is_product else (self.m,)

    def sort_key(self):
        return (_RANK[self.family],) + self.parameters()

    def __str__(self) -> str:
        if self.family == Family.CYCLIC:
            return f"Z_{self.m}"
        if self.family == Family.DIHEDRAL:
            return f"D_{self.m}"
        base = f"Z_{self.r} x Z_{self.s}"
        return f"({base}) x| Z_2" if self.semidirect else base

    def as_dict(self) -> dict:
        data = {"family": self.family.value, "name": str(self)}
        if self.is_product:
            data.update(r=self.r, s=self.s)
        else:
            data["m"] = self.m
        return data
