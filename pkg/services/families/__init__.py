from .params import FamilyKind, FamilyParams
from .groups import build_group, generators
from .placement import Placement, PlacementBuilder, build_placement, recipe_name
from .action import InducedAction, induced_action, vertex_orbits
from .plan import ConstructionPlan, plan_construction

__all__ = [
    'FamilyKind', 'FamilyParams', 'build_group', 'generators',
    'Placement', 'PlacementBuilder', 'build_placement', 'recipe_name',
    'InducedAction', 'induced_action', 'vertex_orbits',
    'ConstructionPlan', 'plan_construction',
]
