from .enumeration import OrderScan, automorphism_count, enumerate_automorphisms, realizable_orders, scan_orders
from .crosscheck import OracleReport, OracleRow, build_oracle_report, crosscheck_cyclic_dihedral

__all__ = [
    'OrderScan', 'automorphism_count', 'enumerate_automorphisms', 'realizable_orders', 'scan_orders',
    'OracleReport', 'OracleRow', 'build_oracle_report', 'crosscheck_cyclic_dihedral',
]
