from .matcher import CaseMatch, RealizabilityVerdict, match_cases

__all__ = ['CaseMatch', 'RealizabilityVerdict', 'match_cases']
