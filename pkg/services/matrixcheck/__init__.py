from .so4 import (
    AngleAnalysis,
    Isoclinic,
    SO4Report,
    analyze_angles,
    commuting_block_error,
    fixed_set_agreement,
    fixed_space_dim,
    motion_to_matrix,
    verify_homomorphism,
    verify_so4,
)

__all__ = [
    'AngleAnalysis', 'Isoclinic', 'SO4Report', 'analyze_angles', 'commuting_block_error',
    'fixed_set_agreement', 'fixed_space_dim', 'motion_to_matrix', 'verify_homomorphism', 'verify_so4',
]
