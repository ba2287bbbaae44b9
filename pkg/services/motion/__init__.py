from .motion import (
    ALL,
    CIRCLE_X,
    CIRCLE_Y,
    CIRCLE_Z,
    EMPTY,
    HALF,
    IDENTITY,
    PHI,
    QUARTER,
    FixedSet,
    FixedSetKind,
    Motion,
    Turn,
    axis_circle,
    compose,
    fixed_set,
    format_turn,
    order,
    parse_motion,
    turn,
)
from .points import Free, OnX, OnY, Point, ZOrbit, act, describe_point, point_sort_key
from .circles import circle_image, meet, parameter_of, point_on_circle
from .group import MotionGroup, generate, orbit, orbit_union, stabilizer

__all__ = [
    'ALL', 'CIRCLE_X', 'CIRCLE_Y', 'CIRCLE_Z', 'EMPTY', 'HALF', 'IDENTITY', 'PHI', 'QUARTER',
    'FixedSet', 'FixedSetKind', 'Motion', 'Turn', 'axis_circle', 'compose', 'fixed_set',
    'format_turn', 'order', 'parse_motion', 'turn',
    'Free', 'OnX', 'OnY', 'Point', 'ZOrbit', 'act', 'describe_point', 'point_sort_key',
    'circle_image', 'meet', 'parameter_of', 'point_on_circle',
    'MotionGroup', 'generate', 'orbit', 'orbit_union', 'stabilizer',
]
