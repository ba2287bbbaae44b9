from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from config.config import ORACLE_MAX_M, ORACLE_MAX_N
from services.bipartite import format_cycles
from services.classify import classify_cyclic_dihedral
from utils.errors import InvalidParams, MTooSmall, NTooLarge, NTooSmall
from utils.logger import get_logger
from .enumeration import OrderScan, scan_orders

log = get_logger("Oracle")


def _check_ranges(n_range: Iterable[int], m_range: Iterable[int]) -> Tuple[List[int], List[int]]:
    ns, ms = sorted(set(n_range)), sorted(set(m_range))
    if not ns or not ms:
        raise InvalidParams("Cross-check ranges must not be empty")
    if ns[0] < 3:
        raise NTooSmall(f"n must be at least 3, got {ns[0]}")
    if ns[-1] > ORACLE_MAX_N:
        raise NTooLarge(f"n is limited to {ORACLE_MAX_N}, got {ns[-1]}")
    if ms[0] < 2:
        raise MTooSmall(f"m must be at least 2, got {ms[0]}")
    if ms[-1] > ORACLE_MAX_M:
        raise InvalidParams(f"m is limited to {ORACLE_MAX_M}, got {ms[-1]}")
    return ns, ms


@dataclass(frozen=True)
class OracleRow:
    n: int
    m: int
    enumerated: bool
    classified: bool
    conditions: Tuple[str, ...]
    sample: Optional[str]

    @property
    def agrees(self) -> bool:
        return self.enumerated == self.classified

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "enumerated": self.enumerated,
            "classified": self.classified,
            "conditions": list(self.conditions),
            "sample": self.sample,
            "agrees": self.agrees,
        }


def _rows(scan: OrderScan, ms: List[int]) -> List[OracleRow]:
    rows = []
    for m in ms:
        verdict = classify_cyclic_dihedral(scan.n, m)
        sample = scan.samples.get(m)
        rows.append(OracleRow(
            scan.n, m, m in scan.realizable, verdict.contained, tuple(verdict.matched_conditions),
            format_cycles(sample) if sample is not None else None,
        ))
    return rows


def crosscheck_cyclic_dihedral(n_range: Iterable[int], m_range: Iterable[int], workers: int = 1) -> List[dict]:
    """
    Compare exhaustive enumeration with the congruence conditions for Z_m and D_m.

    Returns the disagreeing (n, m) rows; an empty list means full agreement.
    """
    ns, ms = _check_ranges(n_range, m_range)
    discrepancies = []
    for n in ns:
        for row in _rows(scan_orders(n, workers), ms):
            if not row.agrees:
                log.error(f"Oracle disagrees with classification at n={row.n}, m={row.m}")
                discrepancies.append(row.as_dict())
    return discrepancies


def _divisor_diagnostics(scan: OrderScan) -> List[str]:
    notes = []
    realizable = scan.realizable
    for m in sorted(realizable):
        for d in range(2, m):
            if m % d == 0 and d not in realizable:
                notes.append(f"n={scan.n}: order {m} is realizable but its divisor {d} is not")
    return notes


@dataclass(frozen=True)
class OracleReport:
    max_n: int
    max_m: int
    counts: Tuple[Tuple[int, int], ...]
    rows: Tuple[OracleRow, ...]
    diagnostics: Tuple[str, ...]

    @property
    def discrepancies(self) -> List[OracleRow]:
        return [row for row in self.rows if not row.agrees]

    @property
    def passed(self) -> bool:
        return not self.discrepancies

    def as_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "max_m": self.max_m,
            "order_cap": ORACLE_MAX_M,
            "counts": {str(n): count for n, count in self.counts},
            "rows": [row.as_dict() for row in self.rows],
            "discrepancies": [row.as_dict() for row in self.discrepancies],
            "diagnostics": list(self.diagnostics),
        }


def build_oracle_report(max_n: int, max_m: int, workers: int = 1) -> OracleReport:
    """Enumerate every n in [3, max_n] once and compare each m in [2, max_m]."""
    ns, ms = _check_ranges(range(3, max_n + 1), range(2, max_m + 1))
    counts: Dict[int, int] = {}
    rows, diagnostics = [], []
    for n in ns:
        scan = scan_orders(n, workers)
        counts[n] = scan.count
        rows.extend(_rows(scan, ms))
        diagnostics.extend(_divisor_diagnostics(scan))
    report = OracleReport(max_n, max_m, tuple(counts.items()), tuple(rows), tuple(diagnostics))
    log.info(f"Oracle report up to n={max_n}, m={max_m}: {len(report.discrepancies)} discrepancies")
    return report
