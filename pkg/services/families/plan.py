from dataclasses import dataclass

from services.classify import GroupSpec, classify_group
from utils.errors import CongruenceMismatch
from .params import FamilyKind, FamilyParams
from .placement import recipe_name


@dataclass(frozen=True)
class ConstructionPlan:
    target: GroupSpec
    params: FamilyParams
    recipe: str
    condition: str

    def as_dict(self) -> dict:
        return {
            "target": self.target.as_dict(),
            "params": self.params.as_dict(),
            "recipe": self.recipe,
            "condition": self.condition,
        }


def plan_construction(n: int, group: GroupSpec) -> ConstructionPlan:
    """
    Pick the group of motions and placement that realize group for K_{n,n}.

    Raises:
        CongruenceMismatch: group is not contained for this n.
    """
    verdict = classify_group(n, group)
    if not verdict.contained:
        raise CongruenceMismatch(f"{group} is not realizable for K_{{{n},{n}}}")

    answered = verdict.answered_as or group
    if not answered.is_product:
        m = answered.m
        if n % m in (0, 1, 2):
            params, condition = FamilyParams(FamilyKind.G1, n, m=m), "C1"
        elif m % 2 == 0 and n % m == m // 2:
            params, condition = FamilyParams(FamilyKind.G2, n, m=m), "C2"
        else:
            params, condition = FamilyParams(FamilyKind.G3, n, m=m), "C3"
    else:
        r, s = answered.r, answered.s
        if n % s == 0:
            params, condition = FamilyParams(FamilyKind.J1, n, r=r, s=s), "P1"
        elif r == 2 and n % (2 * s) == 2:
            params, condition = FamilyParams(FamilyKind.J1, n, r=2, s=s), "P2"
        elif r == 2:
            params, condition = FamilyParams(FamilyKind.J2, n, s=s), "P3"
        else:
            params, condition = FamilyParams(FamilyKind.J1, n, r=4, s=s), "P4"

    return ConstructionPlan(group, params, recipe_name(params), condition)
