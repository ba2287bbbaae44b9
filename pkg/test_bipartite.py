import pytest

from services.bipartite import (
    BipartiteAutomorphism,
    Part,
    VertexId,
    cycle_structure,
    format_cycles,
    maps_orbits_to_orbits,
    order,
    parse_cycles,
    validate_automorphism,
)
from utils.errors import CycleNotationError, MixedAction, NotBijective


def test_vertex_encoding():
    assert VertexId.parse("v3").to_int(4) == 2
    assert VertexId.parse("W1").to_int(4) == 4
    assert str(VertexId.from_int(4, 7)) == "w4"
    with pytest.raises(CycleNotationError):
        VertexId.parse("x2")
    with pytest.raises(CycleNotationError):
        VertexId.parse("v0")


def test_parse_and_format():
    phi = parse_cycles(3, "(v1 w1 v2 w2 v3 w3)")
    assert phi.swaps_parts
    assert order(phi) == 6
    assert format_cycles(phi) == "(v1 w1 v2 w2 v3 w3)"
    assert format_cycles(parse_cycles(3, "(w2 v2)(w1 v1)(v3 w3)")) == "(v1 w1)(v2 w2)(v3 w3)"
    assert format_cycles(BipartiteAutomorphism.identity(3)) == "()"


def test_parse_rejects_bad_text():
    with pytest.raises(CycleNotationError):
        parse_cycles(3, "(v1 v2) v3")
    with pytest.raises(CycleNotationError):
        parse_cycles(3, "(v1 v2)(v2 v3)")
    with pytest.raises(CycleNotationError):
        parse_cycles(3, "(v1 v4)")
    with pytest.raises(MixedAction):
        parse_cycles(3, "(v1 w1)")


def test_automorphism_validation():
    with pytest.raises(NotBijective):
        BipartiteAutomorphism(2, (0, 0, 2, 3))
    with pytest.raises(MixedAction):
        BipartiteAutomorphism(2, (2, 1, 0, 3))
    with pytest.raises(MixedAction):
        BipartiteAutomorphism(2, (1, 0, 2, 3), swaps_parts=True)

    v1, v2, w1, w2 = (VertexId(Part.V, 1), VertexId(Part.V, 2), VertexId(Part.W, 1), VertexId(Part.W, 2))
    phi = validate_automorphism(2, {v1: w1, v2: w2, w1: v2, w2: v1})
    assert phi.swaps_parts
    assert phi(w1) == v2
    with pytest.raises(NotBijective):
        validate_automorphism(2, {v1: v1, v2: v2, w1: w1})


def test_composition_applies_right_factor_first():
    alpha = parse_cycles(3, "(v1 v2 v3)")
    beta = parse_cycles(3, "(v1 v2)")
    # v1 -beta-> v2 -alpha-> v3
    assert (alpha * beta)(VertexId(Part.V, 1)) == VertexId(Part.V, 3)
    assert (alpha * alpha.inverse()).is_identity
    assert (alpha ** 3).is_identity


def test_cycle_structure():
    phi = parse_cycles(6, "(v1 v2)(v3 v4 v5 v6)(w1 w2)(w3 w4 w5 w6)")
    cs = cycle_structure(phi)
    assert cs.v_cycles == (2, 4)
    assert cs.w_cycles == (2, 4)
    assert cs.mixed_cycles == ()
    assert cs.total == 12

    cs = cycle_structure(parse_cycles(4, "(v1 v2 v3)"))
    assert cs.fixed_v == 1
    assert cs.fixed_w == 4


def test_maps_orbits_to_orbits():
    alpha = parse_cycles(4, "(v1 v2)(v3 v4)")
    assert maps_orbits_to_orbits(alpha, parse_cycles(4, "(v1 v3)(v2 v4)"))
    assert not maps_orbits_to_orbits(alpha, parse_cycles(4, "(v2 v3)"))
