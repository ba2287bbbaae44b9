import math
from fractions import Fraction

import numpy as np
import pytest

from services.families import FamilyKind, FamilyParams, build_group
from services.matrixcheck import (
    Isoclinic,
    analyze_angles,
    commuting_block_error,
    fixed_set_agreement,
    fixed_space_dim,
    motion_to_matrix,
    verify_homomorphism,
    verify_so4,
)
from services.motion import IDENTITY, PHI, Motion
from utils.errors import AmbiguousRank

F = Fraction

GROUPS = [
    FamilyParams(FamilyKind.G1, 5, m=4),
    FamilyParams(FamilyKind.G2, 6, m=4),
    FamilyParams(FamilyKind.G3, 6, m=8),
    FamilyParams(FamilyKind.J1, 8, r=2, s=4),
    FamilyParams(FamilyKind.J2, 6, s=4),
]


def test_matrices_are_rotations():
    for m in (Motion(F(1, 5), F(2, 7)), Motion(F(1, 3), F(1, 4), True), PHI):
        matrix = motion_to_matrix(m)
        assert np.allclose(matrix @ matrix.T, np.eye(4))
        assert math.isclose(np.linalg.det(matrix), 1.0)
    assert np.allclose(motion_to_matrix(PHI), np.diag([1.0, -1.0, 1.0, -1.0]))


def test_fixed_space_dimensions():
    assert fixed_space_dim(motion_to_matrix(IDENTITY)) == 4
    assert fixed_space_dim(motion_to_matrix(Motion(F(1, 3), 0))) == 2
    assert fixed_space_dim(motion_to_matrix(Motion(F(1, 3), F(1, 5)))) == 0
    assert fixed_space_dim(motion_to_matrix(Motion(F(1, 3), F(1, 5), True))) == 2


def test_near_threshold_rank_is_ambiguous():
    with pytest.raises(AmbiguousRank):
        fixed_space_dim(np.eye(4) + np.diag([1e-7, 0.0, 0.0, 0.0]))


def test_angles_of_isoclinic_rotations():
    left = analyze_angles(motion_to_matrix(Motion(F(1, 5), F(1, 5))))
    assert left.isoclinic == Isoclinic.LEFT
    assert math.isclose(left.alpha, 2 * math.pi / 5)
    assert math.isclose(left.beta, 2 * math.pi / 5)

    right = analyze_angles(motion_to_matrix(Motion(F(1, 5), F(4, 5))))
    assert right.isoclinic == Isoclinic.RIGHT
    assert math.isclose(abs(right.alpha), 2 * math.pi / 5)


def test_angles_of_generic_rotation():
    result = analyze_angles(motion_to_matrix(Motion(F(1, 5), F(1, 3))))
    assert result.isoclinic == Isoclinic.NO
    assert math.isclose(result.alpha, 2 * math.pi / 5)
    assert math.isclose(result.beta, 2 * math.pi / 3)


@pytest.mark.parametrize("params", GROUPS, ids=str)
def test_group_agrees_with_matrices(params):
    group = build_group(params)
    assert verify_homomorphism(group) < 1e-9
    assert fixed_set_agreement(group) == []
    assert commuting_block_error(group) < 1e-9

    report = verify_so4(group)
    assert report.passed
    assert sum(count for _, count in report.isoclinic_counts) == group.order // 2
    assert report.as_dict()["order"] == params.expected_order
