import pytest

from services.bipartite import order
from services.oracle import (
    automorphism_count,
    build_oracle_report,
    crosscheck_cyclic_dihedral,
    enumerate_automorphisms,
    realizable_orders,
    scan_orders,
)
from services.oracle import enumeration
from services.oracle.enumeration import BlockScan
from services.realizable import match_cases
from utils.errors import EnumerationIncomplete, InvalidParams, MTooSmall, NTooLarge, NTooSmall


def test_enumeration_is_complete_and_distinct():
    found = list(enumerate_automorphisms(3))
    assert len(found) == automorphism_count(3) == 72
    assert len({phi.image for phi in found}) == 72
    assert found[0].is_identity
    assert sum(1 for phi in found if phi.swaps_parts) == 36


def test_enumeration_is_bounded():
    with pytest.raises(NTooLarge):
        next(enumerate_automorphisms(7))


def test_realizable_orders_for_k33():
    scan = scan_orders(3)
    assert scan.count == 72
    assert scan.realizable == realizable_orders(3) == {1, 2, 3, 6}
    assert 4 in scan.orders
    sample = scan.samples[6]
    assert order(sample) == 6
    assert match_cases(sample).realizable


def test_parallel_scan_matches_serial_scan():
    serial, parallel = scan_orders(4), scan_orders(4, workers=2)
    assert parallel.count == serial.count == automorphism_count(4)
    assert parallel.orders == serial.orders
    assert parallel.realizable == serial.realizable


@pytest.mark.parametrize("n", [3, 4, 5])
def test_classification_agrees_with_enumeration(n):
    assert crosscheck_cyclic_dihedral([n], range(2, 13)) == []


@pytest.mark.slow
def test_full_oracle_grid():
    report = build_oracle_report(6, 12)
    assert report.passed
    assert report.as_dict()["counts"]["6"] == automorphism_count(6) == 1036800


def test_oracle_report():
    report = build_oracle_report(4, 12)
    data = report.as_dict()
    assert report.passed
    assert data["counts"] == {"3": 72, "4": 1152}
    assert len(data["rows"]) == 2 * 11
    assert data["discrepancies"] == []


def test_range_checks():
    with pytest.raises(NTooSmall):
        scan_orders(2)
    with pytest.raises(NTooLarge):
        crosscheck_cyclic_dihedral([7], [3])
    with pytest.raises(MTooSmall):
        crosscheck_cyclic_dihedral([3], [1])
    with pytest.raises(InvalidParams):
        crosscheck_cyclic_dihedral([3], [13])


def test_incomplete_scan_is_an_error(monkeypatch):
    monkeypatch.setattr(enumeration, "_scan_block", lambda n, swaps, first: BlockScan(count=1))
    with pytest.raises(EnumerationIncomplete):
        scan_orders(3)
