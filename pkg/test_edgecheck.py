from fractions import Fraction

import pytest

from services.bipartite import Part, VertexId
from services.edgecheck import (
    Embeddability,
    arc_options,
    assign_arcs,
    check_conditions,
    circle_embeddable,
    part_counts,
)
from services.edgecheck.arcs import shared_endpoint_notes
from services.families import FamilyKind, FamilyParams, Placement, build_group, build_placement
from services.motion import CIRCLE_X, OnX
from test_families import GRID

F = Fraction


def v(k):
    return VertexId(Part.V, k)


def w(k):
    return VertexId(Part.W, k)


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (0, 5, Embeddability.PROPER_SUBSET),
        (1, 1, Embeddability.PROPER_SUBSET),
        (2, 1, Embeddability.PROPER_SUBSET),
        (2, 2, Embeddability.FULL_CIRCLE_ONLY),
        (1, 3, Embeddability.NO),
        (3, 3, Embeddability.NO),
    ],
)
def test_circle_embeddable(a, b, expected):
    assert circle_embeddable(a, b) == expected


def test_circle_embeddable_rejects_negative_counts():
    with pytest.raises(ValueError):
        circle_embeddable(-1, 2)


def test_part_counts():
    assert part_counts([v(1), w(2), w(3)]) == (1, 2)
    assert part_counts([]) == (0, 0)


def test_arc_geometry():
    first, second = arc_options(CIRCLE_X, v(1), w(1), F(1, 8), F(7, 8))
    assert (first.start, first.length) == (F(1, 8), F(3, 4))
    assert (second.start, second.length) == (F(7, 8), F(1, 4))
    assert second.contains(0)
    assert not second.contains(F(1, 8))
    assert first.contains(F(1, 2))
    assert first.interiors_meet(first)
    assert not first.interiors_meet(second)


def test_assign_arcs_on_four_points():
    params = {v(1): F(1, 8), v(2): F(5, 8), w(1): F(7, 8), w(2): F(3, 8)}
    pairs = [(a, b, params[a], params[b]) for a in (v(1), v(2)) for b in (w(1), w(2))]
    arcs = assign_arcs(CIRCLE_X, pairs, params.values())
    assert arcs is not None
    assert all(arc.length == F(1, 4) for arc in arcs)
    notes = shared_endpoint_notes(arcs)
    assert len(notes) == 4
    assert all(note.startswith("SharedEndpoint") for note in notes)


def test_assign_arcs_fails_when_both_sides_hold_vertices():
    pairs = [(v(1), w(1), F(0), F(1, 2))]
    assert assign_arcs(CIRCLE_X, pairs, [F(0), F(1, 4), F(1, 2), F(3, 4)]) is None


@pytest.mark.parametrize("params", [*GRID, FamilyParams(FamilyKind.G1, 4, m=3)], ids=str)
def test_constructions_satisfy_all_conditions(params):
    report = check_conditions(build_placement(params))
    assert report.passed, report.as_dict()
    assert report.failed == []
    assert [r.number for r in report.results] == [1, 2, 3, 4, 5]


def test_g1_axis_pair_gets_an_arc_of_x():
    report = check_conditions(build_placement(FamilyParams(FamilyKind.G1, 5, m=4)))
    arcs = report.arcs.on(CIRCLE_X)
    assert len(arcs) == 1
    assert (str(arcs[0].v), str(arcs[0].w)) == ("v1", "w1")
    assert report.result(4).checked > 0


def test_crowded_circle_fails_arc_condition():
    params = FamilyParams(FamilyKind.G1, 3, m=3)
    placement = Placement.from_parts(
        build_group(params),
        params,
        [OnX(0), OnX(F(1, 8)), OnX(F(7, 8))],
        [OnX(F(1, 2)), OnX(F(3, 8)), OnX(F(5, 8))],
    )
    report = check_conditions(placement)
    assert not report.passed
    assert not report.result(2).passed
    assert report.result(2).witness["circle"] == "CircleX"
    assert report.as_dict()["conditions"][1]["status"] == "fail"
