"""
Congruence tests deciding whether K_{n,n} embeds with a given group inside (or equal
to) its orientation-preserving topological symmetry group.
"""
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from utils.errors import MTooSmall, NTooSmall, UnsupportedGroup
from utils.logger import get_logger
from .groups import GroupSpec, normalize_rs

log = get_logger("Classify")

CONDITIONS = {
    "C1": "n ≡ 0, 1 or 2 (mod m)",
    "C2": "m even and n ≡ 0 (mod m/2)",
    "C3": "4 | m and n ≡ 2 (mod m/2)",
    "P1": "n ≡ 0 (mod s)",
    "P2": "r = 2 and n ≡ 2 (mod 2s)",
    "P3": "r = 2, 4 | s and n ≡ s+2 (mod 2s)",
    "P4": "r = 4 and n ≡ 2 (mod 2s)",
}

# (n, s, r) pairs left open for the semidirect form only
OPEN_SEMIDIRECT = {(6, 4, 2), (10, 4, 4)}


class Containment(str, Enum):
    YES = "Yes"
    NO = "No"


class Equality(str, Enum):
    YES = "Yes"
    OPEN = "Open"
    NO = "No"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class ClassificationVerdict:
    containment: Containment
    equality: Equality
    matched_conditions: Tuple[str, ...] = ()
    normalization_note: Optional[str] = None
    answered_as: Optional[GroupSpec] = None

    def __post_init__(self):
        if self.equality == Equality.YES and self.containment != Containment.YES:
            raise ValueError("equality Yes requires containment Yes")
        if self.containment == Containment.NO and self.equality != Equality.NO:
            raise ValueError("containment No forces equality No")
        if bool(self.matched_conditions) != (self.containment == Containment.YES):
            raise ValueError("matched conditions must be present exactly when contained")

    @property
    def contained(self) -> bool:
        return self.containment == Containment.YES

    def with_note(self, note: Optional[str], answered_as: GroupSpec) -> "ClassificationVerdict":
        return ClassificationVerdict(self.containment, self.equality, self.matched_conditions, note, answered_as)


def _verdict(conditions: List[str], open_case: bool = False) -> ClassificationVerdict:
    if not conditions:
        return ClassificationVerdict(Containment.NO, Equality.NO)
    return ClassificationVerdict(Containment.YES, Equality.OPEN if open_case else Equality.YES, tuple(conditions))


def classify_cyclic_dihedral(n: int, m: int) -> ClassificationVerdict:
    """
    Decide Z_m and D_m together; both share the same conditions and equality
    holds whenever containment does.

    Raises:
        NTooSmall: n < 3.
        MTooSmall: m < 2.
    """
    if n < 3:
        raise NTooSmall(f"n must be at least 3, got {n}")
    if m < 2:
        raise MTooSmall(f"m must be at least 2, got {m}")

    matched = []
    if n % m in (0, 1, 2):
        matched.append("C1")
    if m % 2 == 0 and n % (m // 2) == 0:
        matched.append("C2")
    if m % 4 == 0 and n % (m // 2) == 2 % (m // 2):
        matched.append("C3")
    return _verdict(matched)


def is_open_product(n: int, r: int, s: int, semidirect: bool) -> bool:
    if n % s == 0 and 1 <= n // s < 2 * r:
        return True
    return semidirect and (n, s, r) in OPEN_SEMIDIRECT


def classify_product(n: int, r: int, s: int, semidirect: bool = False) -> ClassificationVerdict:
    """
    Decide Z_r x Z_s or (Z_r x Z_s) x| Z_2 after rewriting to r | s.

    r = 1 is answered as Z_s or D_s; (2, 2) without the extra involution is D_2.

    Raises:
        NTooSmall: n < 3.
        UnsupportedGroup: the trivial group, or (Z_2 x Z_2) x| Z_2.
    """
    if n < 3:
        raise NTooSmall(f"n must be at least 3, got {n}")
    r2, s2, note = normalize_rs(r, s)

    if r2 == 1:
        if s2 == 1:
            raise UnsupportedGroup("The trivial group is not one of the classified families")
        answered = GroupSpec.dihedral(s2) if semidirect else GroupSpec.cyclic(s2)
        log.debug(f"Z_{r} x Z_{s} delegated to {answered}")
        return classify_cyclic_dihedral(n, s2).with_note(note, answered)

    if (r2, s2) == (2, 2):
        if semidirect:
            raise UnsupportedGroup("(Z_2 x Z_2) x| Z_2 is outside the classified families")
        reason = f"{note}; " if note else ""
        return classify_cyclic_dihedral(n, 2).with_note(f"{reason}Z_2 x Z_2 is D_2", GroupSpec.dihedral(2))

    matched = []
    if n % s2 == 0:
        matched.append("P1")
    if r2 == 2 and n % (2 * s2) == 2:
        matched.append("P2")
    if r2 == 2 and s2 % 4 == 0 and n % (2 * s2) == s2 + 2:
        matched.append("P3")
    if r2 == 4 and n % (2 * s2) == 2:
        matched.append("P4")

    verdict = _verdict(matched, open_case=bool(matched) and is_open_product(n, r2, s2, semidirect))
    if note:
        verdict = verdict.with_note(note, GroupSpec.product(r2, s2, semidirect))
    return verdict


def classify_group(n: int, group: GroupSpec) -> ClassificationVerdict:
    if group.is_product:
        return classify_product(n, group.r, group.s, group.semidirect)
    return classify_cyclic_dihedral(n, group.m)


def enumerate_groups(n: int, max_order: int) -> List[Tuple[GroupSpec, ClassificationVerdict]]:
    """
    Every Z_m and D_m with m <= max_order and every normalized product with
    2 <= r | s, 3 <= s <= max_order, both forms, sorted by (family, parameters).
    """
    if n < 3:
        raise NTooSmall(f"n must be at least 3, got {n}")
    if max_order < 2:
        raise MTooSmall(f"max_order must be at least 2, got {max_order}")

    rows = []
    for m in range(2, max_order + 1):
        verdict = classify_cyclic_dihedral(n, m)
        rows.append((GroupSpec.cyclic(m), verdict))
        rows.append((GroupSpec.dihedral(m), verdict))
    for s in range(3, max_order + 1):
        for r in range(2, s + 1):
            if s % r:
                continue
            for semidirect in (False, True):
                rows.append((GroupSpec.product(r, s, semidirect), classify_product(n, r, s, semidirect)))

    rows.sort(key=lambda row: row[0].sort_key())
    log.info(f"Enumerated {len(rows)} groups for n={n}, max_order={max_order}")
    return rows


def describe_condition(condition_id: str) -> str:
    return f"condition {condition_id}: {CONDITIONS[condition_id]}"
