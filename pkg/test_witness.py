import pytest

from services.classify import Equality, GroupSpec, classify_group
from services.edgecheck import WitnessStatus, restricted_witness_search, subgroup_witness
from services.families import FamilyKind, FamilyParams, build_placement, induced_action
from test_families import GRID
from utils.errors import EnumerationTooLarge, InvalidParams

SEARCHABLE = [params for params in GRID if 2 * params.n <= 16]

CROSSCHECKED = [
    FamilyParams(FamilyKind.G1, 3, m=3),
    FamilyParams(FamilyKind.G1, 5, m=4),
    FamilyParams(FamilyKind.G1, 4, m=2),
    FamilyParams(FamilyKind.G2, 6, m=4),
]


def witness_target(params):
    if params.family == FamilyKind.J2:
        return params.rotation_target
    return params.target


@pytest.mark.parametrize("params", SEARCHABLE, ids=str)
def test_grid_witnesses(params):
    target = witness_target(params)
    report = subgroup_witness(build_placement(params), target)
    if classify_group(params.n, target).equality == Equality.OPEN:
        assert report.status == WitnessStatus.NOT_APPLICABLE
        return
    assert report.status == WitnessStatus.PASSED, report.as_dict()
    assert report.corollary is True
    assert report.subgroup_order == target.order
    assert report.fixed_subgraph is not None


@pytest.mark.parametrize("params", CROSSCHECKED, ids=str)
def test_full_group_witness_passes(params):
    placement = build_placement(params)
    action = induced_action(placement)
    report = subgroup_witness(placement, action=action)
    assert report.status == WitnessStatus.PASSED
    assert report.target == str(params.target)
    assert report.subgroup_order == params.expected_order
    assert report.examined >= 1
    assert report.corollary is True

    restricted = restricted_witness_search(placement, action=action)
    assert restricted.status == report.status


def test_g1_uses_three_edges_from_one_free_orbit():
    placement = build_placement(FamilyParams(FamilyKind.G1, 5, m=4))
    report = subgroup_witness(placement)
    assert report.scheme == "g1-three-edges"
    assert len(report.edges) == 3
    assert len({v for v, _ in report.edges}) == 1
    # each edge is flipped by one reflection, so its orbit has half the group order
    assert all(size == 4 for size in report.orbit_sizes)


def test_rotation_target_reports_corollary():
    params = FamilyParams(FamilyKind.G1, 5, m=4)
    report = subgroup_witness(build_placement(params), params.rotation_target)
    assert report.passed
    assert report.target == "Z_4"
    assert report.corollary is True


def test_open_targets_are_not_applicable():
    params = FamilyParams(FamilyKind.J1, 8, r=2, s=4)
    placement = build_placement(params)
    report = subgroup_witness(placement)
    assert report.status == WitnessStatus.NOT_APPLICABLE
    assert "open" in report.reason
    assert subgroup_witness(placement, params.rotation_target).status == WitnessStatus.NOT_APPLICABLE


def test_product_only_case_uses_rotation_subgroup():
    params = FamilyParams(FamilyKind.J2, 6, s=4)
    placement = build_placement(params)
    assert subgroup_witness(placement).status == WitnessStatus.NOT_APPLICABLE

    report = subgroup_witness(placement, params.rotation_target)
    assert report.status == WitnessStatus.PASSED
    assert report.scheme == "rotation-subgroup"
    assert report.subgroup_order == 8
    assert report.corollary is True
    assert restricted_witness_search(placement, params.rotation_target).status == WitnessStatus.PASSED


def test_g2_with_m2_has_no_scheme():
    report = subgroup_witness(build_placement(FamilyParams(FamilyKind.G2, 5, m=2)))
    assert report.status == WitnessStatus.NOT_APPLICABLE
    assert "G1" in report.reason


def test_foreign_target_is_rejected():
    placement = build_placement(FamilyParams(FamilyKind.G1, 5, m=4))
    with pytest.raises(InvalidParams):
        subgroup_witness(placement, GroupSpec.cyclic(3))


def test_large_graphs_are_not_searched():
    placement = build_placement(FamilyParams(FamilyKind.J1, 10, r=2, s=4))
    with pytest.raises(EnumerationTooLarge):
        subgroup_witness(placement)
