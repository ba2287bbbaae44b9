"""
Brute-force ground truth over every automorphism of a small K_{n,n}.

Only the realizability matcher is shared with the rest of the package; the
congruence classification is never consulted while scanning.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from math import factorial, lcm
from typing import Dict, Iterator, List, Tuple

from config.config import ORACLE_MAX_N
from services.bipartite import BipartiteAutomorphism
from services.realizable import match_cases
from utils.errors import EnumerationIncomplete, NTooLarge, NTooSmall
from utils.logger import get_logger

log = get_logger("Oracle")

Image = Tuple[int, ...]


def _check_n(n: int, minimum: int = 1) -> None:
    if n > ORACLE_MAX_N:
        raise NTooLarge(f"Enumeration is limited to n <= {ORACLE_MAX_N}, got {n}")
    if n < minimum:
        raise NTooSmall(f"n must be at least {minimum}, got {n}")


def _block_images(n: int, swaps: bool, first: int) -> Iterator[Image]:
    """Images with the given part behaviour whose first vertex goes to ``first``."""
    offset_v, offset_w = (n, 0) if swaps else (0, n)
    rest = [k for k in range(n) if k != first]
    for tail in permutations(rest):
        v_part = tuple(offset_v + k for k in (first,) + tail)
        for w_part in permutations(range(n)):
            yield v_part + tuple(offset_w + k for k in w_part)


def _blocks(n: int) -> List[Tuple[bool, int]]:
    return [(swaps, first) for swaps in (False, True) for first in range(n)]


def enumerate_automorphisms(n: int) -> Iterator[BipartiteAutomorphism]:
    """
    Every automorphism of K_{n,n} exactly once: part-preserving ones first, then
    lexicographically by the images of v1..vn and w1..wn.

    Raises:
        NTooLarge: n > ORACLE_MAX_N.
    """
    _check_n(n)
    for swaps, first in _blocks(n):
        for image in _block_images(n, swaps, first):
            yield BipartiteAutomorphism(n, image, swaps)


def automorphism_count(n: int) -> int:
    return 2 * factorial(n) ** 2


def _structure_key(n: int, image: Image) -> Tuple:
    """Cycle lengths split by part content; the matcher depends on nothing else."""
    seen = [False] * (2 * n)
    v_cycles, w_cycles, mixed = [], [], []
    for start in range(2 * n):
        if seen[start]:
            continue
        length, in_v, k = 0, 0, start
        while not seen[k]:
            seen[k] = True
            length += 1
            in_v += k < n
            k = image[k]
        if in_v == length:
            v_cycles.append(length)
        elif in_v == 0:
            w_cycles.append(length)
        else:
            mixed.append(length)
    return tuple(sorted(v_cycles)), tuple(sorted(w_cycles)), tuple(sorted(mixed))


def _order_of(key: Tuple) -> int:
    return lcm(*key[0], *key[1], *key[2])


@dataclass
class BlockScan:
    """Orders found in one block of the enumeration, with the first realizable sample of each."""

    count: int = 0
    orders: Dict[int, int] = field(default_factory=dict)
    samples: Dict[int, Image] = field(default_factory=dict)


def _scan_block(n: int, swaps: bool, first: int) -> BlockScan:
    cache: Dict[Tuple, bool] = {}
    scan = BlockScan()
    for image in _block_images(n, swaps, first):
        scan.count += 1
        key = _structure_key(n, image)
        realizable = cache.get(key)
        if realizable is None:
            realizable = match_cases(BipartiteAutomorphism(n, image, swaps)).realizable
            cache[key] = realizable
        order = _order_of(key)
        scan.orders[order] = scan.orders.get(order, 0) + 1
        if realizable and order not in scan.samples:
            scan.samples[order] = image
    return scan


@dataclass(frozen=True)
class OrderScan:
    n: int
    count: int
    orders: Dict[int, int]
    samples: Dict[int, BipartiteAutomorphism]

    @property
    def realizable(self) -> set:
        return set(self.samples) | {1}


def scan_orders(n: int, workers: int = 1) -> OrderScan:
    """
    Enumerate K_{n,n} in first-vertex blocks, in parallel when workers > 1.

    Raises:
        NTooLarge: n > ORACLE_MAX_N.
        NTooSmall: n <= 2, where the matcher does not apply.
        EnumerationIncomplete: the blocks did not add up to 2 (n!)^2 automorphisms.
    """
    _check_n(n, minimum=3)
    blocks = _blocks(n)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_scan_block, n, swaps, first) for swaps, first in blocks]
            scans = [f.result() for f in futures]
    else:
        scans = [_scan_block(n, swaps, first) for swaps, first in blocks]

    count, orders, samples = 0, {}, {}
    for (swaps, _), scan in zip(blocks, scans):
        count += scan.count
        for order, seen in scan.orders.items():
            orders[order] = orders.get(order, 0) + seen
        for order, image in scan.samples.items():
            samples.setdefault(order, BipartiteAutomorphism(n, image, swaps))

    if count != automorphism_count(n):
        message = f"Enumerated {count} automorphisms of K_{{{n},{n}}}, expected {automorphism_count(n)}"
        log.error(message)
        raise EnumerationIncomplete(message)
    log.info(f"Scanned {count} automorphisms of K_{{{n},{n}}}: realizable orders {sorted(set(samples) | {1})}")
    return OrderScan(n, count, dict(sorted(orders.items())), dict(sorted(samples.items())))


def realizable_orders(n: int, workers: int = 1) -> set:
    """Orders m of automorphisms of K_{n,n} that match a realizable pattern, plus 1."""
    return scan_orders(n, workers).realizable

