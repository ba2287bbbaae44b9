"""
Floating-point cross-check of the motion algebra with explicit 4x4 matrices.

A motion (a, b) acts by R(2πa) on (x1, x2) and R(2πb) on (x3, x4); φ is
diag(1, -1, 1, -1). The exact algebra stays the source of truth.
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

import numpy as np
from scipy.linalg import block_diag, schur

from services.motion import FixedSetKind, Motion, MotionGroup, fixed_set
from utils.errors import AmbiguousRank
from utils.logger import get_logger

log = get_logger("MatrixCheck")

COMPOSE_TOLERANCE = 1e-9
RANK_THRESHOLD = 1e-7
ANGLE_TOLERANCE = 1e-7
ZERO_TOLERANCE = 1e-12

_K = np.diag([1.0, -1.0])

_FIXED_DIMENSION = {
    FixedSetKind.ALL: 4,
    FixedSetKind.EMPTY: 0,
    FixedSetKind.CIRCLE_X: 2,
    FixedSetKind.CIRCLE_Y: 2,
    FixedSetKind.AXIS_CIRCLE: 2,
}


class Isoclinic(str, Enum):
    NO = "No"
    LEFT = "Left"
    RIGHT = "Right"


def _rotation(turns) -> np.ndarray:
    theta = 2 * math.pi * float(turns)
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


def motion_to_matrix(m: Motion) -> np.ndarray:
    first, second = _rotation(m.a), _rotation(m.b)
    if m.flagged:
        first, second = first @ _K, second @ _K
    return block_diag(first, second)


def _matrices(group: MotionGroup) -> np.ndarray:
    return np.stack([motion_to_matrix(x) for x in group])


def verify_homomorphism(group: MotionGroup) -> float:
    """Largest entry of M(x⋄y) - M(x)M(y) over all pairs."""
    elements = list(group)
    mats = _matrices(group)
    index = {x: k for k, x in enumerate(elements)}
    worst = 0.0
    for i, x in enumerate(elements):
        products = np.einsum("ab,jbc->jac", mats[i], mats)
        composed = mats[[index[x * y] for y in elements]]
        worst = max(worst, float(np.max(np.abs(composed - products))))
    log.debug(f"Homomorphism error {worst:.3e} on {group.name or 'group'} of order {group.order}")
    return worst


def fixed_space_dim(matrix: np.ndarray) -> int:
    """
    Dimension of the fixed subspace, from the singular values of M - I.

    Raises:
        AmbiguousRank: a singular value sits within a factor 10 of the threshold.
    """
    singular = np.linalg.svd(np.asarray(matrix) - np.eye(4), compute_uv=False)
    near = singular[(singular > RANK_THRESHOLD / 10) & (singular < RANK_THRESHOLD * 10)]
    if near.size:
        raise AmbiguousRank(f"Singular value {near[0]:.3e} is too close to {RANK_THRESHOLD}")
    return int(np.sum(singular < RANK_THRESHOLD))


def _wrap(angle: float) -> float:
    """Angle in (-π, π]."""
    wrapped = math.remainder(angle, 2 * math.pi)
    return math.pi if math.isclose(wrapped, -math.pi, abs_tol=ZERO_TOLERANCE) else wrapped


def _invariant_planes(matrix: np.ndarray) -> List[Tuple[float, np.ndarray]]:
    """(angle, 4x2 orthonormal basis) for each invariant plane, from the real Schur form."""
    t, z = schur(np.asarray(matrix, dtype=float), output="real")
    planes, singles = [], []
    i = 0
    while i < 4:
        if i < 3 and abs(t[i + 1, i]) > ZERO_TOLERANCE:
            planes.append((math.atan2(t[i + 1, i], t[i, i]), z[:, i:i + 2].copy()))
            i += 2
        else:
            singles.append((t[i, i], z[:, i].copy()))
            i += 1
    # real eigenvalues of a rotation come in equal pairs
    singles.sort(key=lambda item: item[0])
    for k in range(0, len(singles), 2):
        (value, u), (_, w) = singles[k], singles[k + 1]
        planes.append((0.0 if value > 0 else math.pi, np.column_stack([u, w])))
    return planes


def _flip(plane: Tuple[float, np.ndarray]) -> Tuple[float, np.ndarray]:
    angle, basis = plane
    flipped = basis.copy()
    flipped[:, 1] = -flipped[:, 1]
    return -angle, flipped


@dataclass(frozen=True)
class AngleAnalysis:
    alpha: float
    beta: float
    isoclinic: Isoclinic

    def as_dict(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta, "isoclinic": self.isoclinic.value}


def analyze_angles(matrix: np.ndarray) -> AngleAnalysis:
    """
    Rotation angles of the two invariant planes and the isoclinic type.

    alpha belongs to the plane closest to span(e1, e2), oriented like (e1, e2)
    when that is defined; beta's plane is oriented so both bases together are
    positively oriented. Left means alpha = beta, Right means alpha = -beta.
    """
    planes = _invariant_planes(matrix)
    planes.sort(key=lambda plane: -float(np.linalg.norm(plane[1][:2, :])))
    first, second = planes

    projected = float(np.linalg.det(first[1][:2, :]))
    if projected < -1e-6:
        first = _flip(first)
    if np.linalg.det(np.hstack([first[1], second[1]])) < 0:
        second = _flip(second)

    alpha, beta = _wrap(first[0]), _wrap(second[0])
    if abs(_wrap(alpha - beta)) < ANGLE_TOLERANCE:
        kind = Isoclinic.LEFT
    elif abs(_wrap(alpha + beta)) < ANGLE_TOLERANCE:
        kind = Isoclinic.RIGHT
    else:
        kind = Isoclinic.NO
    return AngleAnalysis(alpha, beta, kind)


def fixed_set_agreement(group: MotionGroup) -> List[dict]:
    """Elements whose symbolic fixed set disagrees with the fixed subspace of their matrix."""
    disagreements = []
    for x in group:
        expected = _FIXED_DIMENSION[fixed_set(x).kind]
        got = fixed_space_dim(motion_to_matrix(x))
        if got != expected:
            disagreements.append({"motion": x.literal(), "fixed_set": str(fixed_set(x)), "dimension": got})
    return disagreements


def commuting_block_error(group: MotionGroup) -> float:
    """
    Largest entry outside the two diagonal 2x2 blocks, or of a commutator, over
    the commuting (unflagged) elements.
    """
    rotations = [motion_to_matrix(x) for x in group if not x.flagged]
    mask = np.ones((4, 4), dtype=bool)
    mask[:2, :2] = mask[2:, 2:] = False
    worst = 0.0
    for i, first in enumerate(rotations):
        worst = max(worst, float(np.max(np.abs(first[mask]))))
        for second in rotations[i + 1:]:
            worst = max(worst, float(np.max(np.abs(first @ second - second @ first))))
    return worst


@dataclass(frozen=True)
class SO4Report:
    group: str
    order: int
    homomorphism_error: float
    fixed_set_disagreements: Tuple[dict, ...]
    block_error: float
    isoclinic_counts: Tuple[Tuple[str, int], ...]

    @property
    def passed(self) -> bool:
        return (
            self.homomorphism_error < COMPOSE_TOLERANCE
            and not self.fixed_set_disagreements
            and self.block_error < COMPOSE_TOLERANCE
        )

    def as_dict(self) -> dict:
        return {
            "group": self.group,
            "order": self.order,
            "passed": self.passed,
            "homomorphism_error": self.homomorphism_error,
            "fixed_set_disagreements": list(self.fixed_set_disagreements),
            "block_error": self.block_error,
            "isoclinic_counts": dict(self.isoclinic_counts),
        }


def verify_so4(group: MotionGroup) -> SO4Report:
    counts = {kind.value: 0 for kind in Isoclinic}
    for x in group:
        if not x.flagged:
            counts[analyze_angles(motion_to_matrix(x)).isoclinic.value] += 1
    report = SO4Report(
        group=group.name,
        order=group.order,
        homomorphism_error=verify_homomorphism(group),
        fixed_set_disagreements=tuple(fixed_set_agreement(group)),
        block_error=commuting_block_error(group),
        isoclinic_counts=tuple(counts.items()),
    )
    if report.passed:
        log.info(f"Matrix model agrees with {group.name} (order {group.order})")
    else:
        log.error(f"Matrix model disagrees with {group.name}: {report.as_dict()}")
    return report
