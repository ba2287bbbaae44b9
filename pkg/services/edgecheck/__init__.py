from .embeddable import Embeddability, circle_embeddable, part_counts
from .arcs import Arc, ArcAssignment, arc_options, assign_arcs
from .conditions import ConditionReport, ConditionResult, check_conditions
from .witness import WitnessReport, WitnessStatus, restricted_witness_search, subgroup_witness

__all__ = [
    'Embeddability', 'circle_embeddable', 'part_counts',
    'Arc', 'ArcAssignment', 'arc_options', 'assign_arcs',
    'ConditionReport', 'ConditionResult', 'check_conditions',
    'WitnessReport', 'WitnessStatus', 'restricted_witness_search', 'subgroup_witness',
]
