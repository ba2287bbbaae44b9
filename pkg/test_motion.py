import random
from fractions import Fraction

import pytest

from services.motion import (
    ALL,
    CIRCLE_X,
    CIRCLE_Y,
    CIRCLE_Z,
    EMPTY,
    IDENTITY,
    PHI,
    Free,
    Motion,
    OnX,
    OnY,
    ZOrbit,
    act,
    axis_circle,
    circle_image,
    compose,
    fixed_set,
    generate,
    meet,
    order,
    orbit,
    parameter_of,
    parse_motion,
    point_on_circle,
    stabilizer,
)
from utils.errors import DegenerateZBase, InvalidParams, SizeBoundExceeded

F = Fraction


def _random_motion(rng: random.Random) -> Motion:
    return Motion(F(rng.randrange(12), 12), F(rng.randrange(10), 10), rng.random() < 0.5)


def test_compose_applies_right_factor_first():
    assert compose(Motion(F(1, 5), 0), Motion(0, F(1, 3))) == Motion(F(1, 5), F(1, 3))
    assert compose(PHI, Motion(F(1, 5), F(1, 3))) == Motion(F(4, 5), F(2, 3), True)
    assert compose(Motion(F(1, 5), 0), PHI) == Motion(F(1, 5), 0, True)
    assert Motion(F(1, 5), 0) * PHI == compose(Motion(F(1, 5), 0), PHI)


def test_composition_is_associative_with_inverses():
    rng = random.Random(11)
    for _ in range(300):
        x, y, z = (_random_motion(rng) for _ in range(3))
        assert compose(compose(x, y), z) == compose(x, compose(y, z))
        assert compose(x, x.inverse()) == IDENTITY


def test_phi_conjugates_rotations_to_inverses():
    h = Motion(F(1, 6), F(1, 3))
    assert PHI * h * PHI == h.inverse()


def test_order():
    assert order(IDENTITY) == 1
    assert order(Motion(F(1, 4), F(1, 6))) == 12
    assert order(Motion(F(1, 7), F(3, 7), True)) == 2
    assert Motion(F(1, 4), F(1, 6)) ** 12 == IDENTITY


def test_fixed_sets():
    assert fixed_set(IDENTITY) == ALL
    assert fixed_set(Motion(F(1, 3), 0)) == CIRCLE_Y
    assert fixed_set(Motion(0, F(1, 3))) == CIRCLE_X
    assert fixed_set(Motion(F(1, 3), F(1, 5))) == EMPTY
    assert fixed_set(PHI) == CIRCLE_Z
    assert fixed_set(Motion(F(1, 4), F(1, 2), True)) == axis_circle(F(1, 4), F(1, 2))


def test_literals():
    assert parse_motion("rot(a=1/5, b=0, phi=1)") == Motion(F(1, 5), 0, True)
    assert Motion(F(6, 5), F(-1, 3)).literal() == "rot(a=1/5, b=2/3, phi=0)"
    with pytest.raises(InvalidParams):
        parse_motion("rot(a=1/0, b=0, phi=0)")
    with pytest.raises(InvalidParams):
        parse_motion("spin(1/2)")


def test_action_on_circles():
    assert act(Motion(F(1, 4), F(1, 3)), OnX(F(1, 8))) == OnX(F(3, 8))
    assert act(PHI, OnX(F(1, 8))) == OnX(F(7, 8))
    assert act(Motion(F(1, 4), F(1, 3)), OnY(F(1, 2))) == OnY(F(5, 6))


def test_z_orbit_points_are_canonical():
    assert ZOrbit(F(3, 8)) == ZOrbit(F(1, 8), Motion(F(1, 2), 0))
    assert act(PHI, ZOrbit(F(1, 8))) == ZOrbit(F(1, 8))
    with pytest.raises(DegenerateZBase):
        ZOrbit(F(1, 4))


def test_action_respects_composition():
    rng = random.Random(3)
    points = [OnX(F(1, 8)), OnY(F(3, 10)), ZOrbit(F(1, 7)), Free(0, Motion(F(1, 3), 0))]
    for _ in range(200):
        x, y = _random_motion(rng), _random_motion(rng)
        for p in points:
            assert act(compose(x, y), p) == act(x, act(y, p))


def test_generate_dihedral_group():
    group = generate([("g", Motion(0, F(1, 4))), ("phi", PHI)], name="D_4")
    assert group.order == 8
    assert group.elements[0] == IDENTITY
    # g rotates the second coordinate, so it fixes X pointwise
    assert len(stabilizer(group, OnX(0))) == 8
    assert set(orbit(group, OnX(F(1, 8)))) == {OnX(F(1, 8)), OnX(F(7, 8))}
    assert len(orbit(group, Free(0))) == 8
    assert group.rotation_subgroup().order == 4


def test_generate_respects_bound():
    with pytest.raises(SizeBoundExceeded):
        generate([("g", Motion(F(1, 200), F(1, 201)))], bound=100)


def test_conjugate_fixes_image_circle():
    rng = random.Random(5)
    for _ in range(200):
        m = _random_motion(rng)
        f = Motion(F(rng.randrange(8), 8), F(rng.randrange(6), 6), True)
        assert fixed_set(m * f * m.inverse()) == circle_image(m, fixed_set(f))


def test_points_on_axis_circle():
    circle = axis_circle(F(1, 3), F(1, 5))
    for k in range(16):
        t = F(k, 16)
        assert parameter_of(circle, point_on_circle(circle, t)) == t
    assert parameter_of(CIRCLE_Z, OnY(0)) == F(1, 4)
    assert parameter_of(CIRCLE_Z, OnX(F(1, 3))) is None
    assert parameter_of(CIRCLE_Z, Free(0)) is None


def test_meet():
    assert meet(CIRCLE_X, CIRCLE_Y) == []
    assert meet(CIRCLE_X, CIRCLE_Z) == [OnX(0), OnX(F(1, 2))]
    assert meet(axis_circle(0, F(1, 2)), CIRCLE_Z) == [OnX(0), OnX(F(1, 2))]
    assert meet(axis_circle(F(1, 2), F(1, 2)), CIRCLE_Z) == []
    with pytest.raises(ValueError):
        meet(CIRCLE_Z, CIRCLE_Z)
