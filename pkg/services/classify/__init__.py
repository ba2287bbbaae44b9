from .groups import Family, GroupSpec, normalize_rs
from .decision import (
    CONDITIONS,
    ClassificationVerdict,
    Containment,
    Equality,
    classify_cyclic_dihedral,
    classify_group,
    classify_product,
    describe_condition,
    enumerate_groups,
    is_open_product,
)

__all__ = [
    'Family', 'GroupSpec', 'normalize_rs',
    'CONDITIONS', 'ClassificationVerdict', 'Containment', 'Equality',
    'classify_cyclic_dihedral', 'classify_group', 'classify_product',
    'describe_condition', 'enumerate_groups', 'is_open_product',
]
