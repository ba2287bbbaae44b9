from fractions import Fraction

import pytest

from services.bipartite import Part
from services.classify import GroupSpec
from services.families import (
    FamilyKind,
    FamilyParams,
    Placement,
    build_group,
    build_placement,
    induced_action,
    plan_construction,
    recipe_name,
    vertex_orbits,
)
from services.motion import Free, OnX, PHI
from utils.errors import CongruenceMismatch, InvalidParams, PlacementDegenerate

G1, G2, G3, J1, J2 = FamilyKind.G1, FamilyKind.G2, FamilyKind.G3, FamilyKind.J1, FamilyKind.J2

GRID = [
    FamilyParams(G1, 3, m=3),
    FamilyParams(G1, 5, m=4),
    FamilyParams(G1, 4, m=2),
    FamilyParams(G1, 7, m=5),
    FamilyParams(G2, 6, m=4),
    FamilyParams(G2, 3, m=6),
    FamilyParams(G3, 6, m=8),
    FamilyParams(J1, 8, r=2, s=4),
    FamilyParams(J1, 10, r=2, s=4),
    FamilyParams(J1, 10, r=4, s=4),
    FamilyParams(J2, 6, s=4),
]


def test_params_validation():
    with pytest.raises(InvalidParams):
        FamilyParams(G1, 2, m=3)
    with pytest.raises(InvalidParams):
        FamilyParams(G2, 6, m=5)
    with pytest.raises(InvalidParams):
        FamilyParams(G3, 6, m=6)
    with pytest.raises(InvalidParams):
        FamilyParams(J1, 6, r=4, s=6)
    with pytest.raises(InvalidParams):
        FamilyParams(J2, 6, s=6)
    with pytest.raises(InvalidParams):
        FamilyParams(G1, 6, r=2, s=4)
    assert FamilyParams(J2, 6, s=4).r == 2


def test_targets():
    params = FamilyParams(J1, 8, r=2, s=4)
    assert params.target == GroupSpec.product(2, 4, semidirect=True)
    assert params.rotation_target == GroupSpec.product(2, 4)
    assert params.expected_order == 16
    assert FamilyParams(J2, 6, s=4).expected_order == 16
    assert FamilyParams(G2, 6, m=4).target == GroupSpec.dihedral(4)


@pytest.mark.parametrize(
    "params, recipe",
    [
        (FamilyParams(G1, 6, m=3), "g1-free"),
        (FamilyParams(G1, 5, m=4), "g1-axis-1"),
        (FamilyParams(G1, 6, m=4), "g1-axis-2"),
        (FamilyParams(G2, 6, m=4), "g2-z-cycle"),
        (FamilyParams(G3, 6, m=8), "g3-z-cycle-y4"),
        (FamilyParams(J2, 6, s=4), "j2-y4-z"),
        (FamilyParams(J1, 16, r=2, s=4), "j1-free"),
        (FamilyParams(J1, 8, r=2, s=4), "j1-even-l"),
        (FamilyParams(J1, 4, r=2, s=4), "j1-odd-l-even-m"),
        (FamilyParams(J1, 3, r=3, s=3), "j1-odd-l-odd-m"),
        (FamilyParams(J1, 10, r=2, s=4), "j1-r2-y4"),
        (FamilyParams(J1, 10, r=4, s=4), "j1-r4-y4-z"),
        (FamilyParams(J1, 18, r=4, s=4), "j1-r4-y4"),
    ],
)
def test_recipe_names(params, recipe):
    assert recipe_name(params) == recipe


def test_recipe_rejects_other_congruences():
    with pytest.raises(CongruenceMismatch):
        recipe_name(FamilyParams(G1, 7, m=4))
    with pytest.raises(CongruenceMismatch):
        recipe_name(FamilyParams(G2, 5, m=4))
    with pytest.raises(CongruenceMismatch):
        recipe_name(FamilyParams(J1, 7, r=2, s=4))


def test_build_group_orders():
    assert build_group(FamilyParams(G1, 5, m=4)).order == 8
    assert build_group(FamilyParams(J1, 8, r=2, s=4)).order == 16
    assert build_group(FamilyParams(G3, 6, m=8)).rotation_subgroup().order == 8


@pytest.mark.parametrize("params", GRID, ids=str)
def test_placements_induce_faithful_actions(params):
    placement = build_placement(params)
    assert placement.group.order == params.expected_order
    assert placement.part_counts == (params.n, params.n)

    action = induced_action(placement)
    assert action.faithful
    assert action.image_order == params.expected_order
    assert all(ok for _, ok in action.relations)


def test_g1_axis_placement():
    placement = build_placement(FamilyParams(G1, 5, m=4))
    assert placement.recipe == "g1-axis-1"
    assert str(placement.vertex_at(OnX(Fraction(1, 8)))) == "v1"
    assert str(placement.vertex_at(OnX(Fraction(7, 8)))) == "w1"
    assert placement.vertex_at(Free(0)).part == Part.V
    assert placement.vertex_at(Free(0, PHI)).part == Part.W

    orbits = vertex_orbits(induced_action(placement))
    assert sorted(len(block) for block in orbits) == [2, 8]


def test_placement_must_be_invariant():
    params = FamilyParams(G1, 3, m=3)
    group = build_group(params)
    v_points = [OnX(Fraction(k, 8)) for k in (1, 3, 5)]
    w_points = [OnX(Fraction(k, 4)) for k in (0, 1, 2)]
    with pytest.raises(PlacementDegenerate):
        Placement.from_parts(group, params, v_points, w_points)


@pytest.mark.parametrize(
    "n, group, family, condition",
    [
        (5, GroupSpec.cyclic(4), G1, "C1"),
        (3, GroupSpec.dihedral(6), G2, "C2"),
        (6, GroupSpec.dihedral(8), G3, "C3"),
        (8, GroupSpec.product(2, 4), J1, "P1"),
        (6, GroupSpec.product(2, 4, semidirect=True), J2, "P3"),
        (10, GroupSpec.product(4, 4), J1, "P4"),
    ],
)
def test_plan_construction(n, group, family, condition):
    plan = plan_construction(n, group)
    assert plan.params.family == family
    assert plan.condition == condition
    assert plan.recipe == recipe_name(plan.params)


def test_plan_rejects_unrealizable_groups():
    with pytest.raises(CongruenceMismatch):
        plan_construction(7, GroupSpec.cyclic(4))
