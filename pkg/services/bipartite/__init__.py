from .automorphism import (
    BipartiteAutomorphism,
    CycleStructure,
    Part,
    VertexId,
    all_vertices,
    cycle_structure,
    maps_orbits_to_orbits,
    order,
    validate_automorphism,
)
from .cycle_notation import format_cycles, parse_cycles

__all__ = [
    'BipartiteAutomorphism', 'CycleStructure', 'Part', 'VertexId', 'all_vertices',
    'cycle_structure', 'maps_orbits_to_orbits', 'order', 'validate_automorphism',
    'format_cycles', 'parse_cycles',
]
