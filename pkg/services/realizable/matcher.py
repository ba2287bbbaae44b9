from collections import Counter
from dataclasses import dataclass, field
from math import lcm
from typing import Dict, List, Optional, Tuple

from services.bipartite import BipartiteAutomorphism, CycleStructure, cycle_structure, order
from utils.errors import MixedAction, NTooSmall
from utils.logger import get_logger

log = get_logger("Realizable")

PARAMETRIZED_CASES = (4, 5, 6)


@dataclass(frozen=True)
class CaseMatch:
    case_id: int
    parts_swapped_for_match: bool = False
    parameters: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self):
        if not 1 <= self.case_id <= 9:
            raise ValueError(f"case_id must be in 1..9, got {self.case_id}")

    def as_dict(self) -> dict:
        return {
            "case_id": self.case_id,
            "parts_swapped_for_match": self.parts_swapped_for_match,
            "parameters": dict(self.parameters),
        }


@dataclass(frozen=True)
class RealizabilityVerdict:
    order: int
    matches: Tuple[CaseMatch, ...] = ()
    diagnostics: Tuple[str, ...] = field(default=(), compare=False)

    @property
    def realizable(self) -> bool:
        return bool(self.matches)

    @property
    def case_ids(self) -> List[int]:
        return sorted({m.case_id for m in self.matches})


@dataclass(frozen=True)
class _Side:
    """Exceptional cycle lengths of one part: length -> count, fixed vertices under length 1."""

    exceptional: Dict[int, int]

    @property
    def empty(self) -> bool:
        return not self.exceptional

    def only(self, *lengths: int) -> bool:
        return set(self.exceptional) <= set(lengths)


def _exceptional(lengths: Tuple[int, ...], fixed: int, r: int) -> _Side:
    counts = Counter(length for length in lengths if length != r)
    if fixed:
        counts[1] += fixed
    return _Side(dict(counts))


def _fixed_only(side: _Side) -> Optional[int]:
    if side.empty:
        return 0
    if side.only(1):
        return side.exceptional[1]
    return None


def _one_sided(r: int, v: _Side, w: _Side) -> List[Tuple[int, Tuple[Tuple[str, int], ...]]]:
    """Templates that put all exceptions in V: cases 2, 4, 5 and 8."""
    found = []
    lengths = sorted(v.exceptional)

    if w.empty and lengths == [1]:
        found.append((2, ()))

    if w.empty and len(lengths) == 1 and lengths[0] >= 2 and r % lengths[0] == 0:
        found.append((4, (("j", lengths[0]),)))

    if w.empty and len(lengths) == 2 and lengths[0] >= 2 and lcm(*lengths) == r:
        found.append((5, (("j", lengths[0]), ("k", lengths[1]))))

    half = r // 2
    if r % 2 == 0 and half % 2 == 1 and half > 1:
        if lengths == [2, half] and v.exceptional[2] == 1 and w.exceptional == {2: 1}:
            found.append((8, ()))
    return found


def _two_sided(r: int, v: _Side, w: _Side) -> List[Tuple[int, Tuple[Tuple[str, int], ...]]]:
    """Templates symmetric in V and W: cases 1, 3, 6 and 7."""
    found = []
    if v.empty and w.empty:
        found.append((1, ()))

    fixed_v, fixed_w = _fixed_only(v), _fixed_only(w)
    if fixed_v is not None and fixed_w is not None and fixed_v <= 2 and fixed_w <= 2 and fixed_v + fixed_w >= 1:
        found.append((3, ()))

    if len(v.exceptional) == 1 and len(w.exceptional) == 1:
        (j,), (k,) = v.exceptional, w.exceptional
        if j >= 2 and k >= 2 and lcm(j, k) == r:
            found.append((6, (("j", j), ("k", k))))

    if v.exceptional == {2: 1} and w.exceptional == {2: 1}:
        found.append((7, ()))
    return found


def _check_balance(phi: BipartiteAutomorphism, cs: CycleStructure) -> None:
    """Cycles of a part-swapping map alternate parts, so each mixed cycle is half V."""
    if not phi.swaps_parts:
        if cs.mixed_cycles:
            raise MixedAction("Part-preserving automorphism with cycles meeting both parts")
        return
    if cs.v_cycles or cs.w_cycles or cs.fixed_v or cs.fixed_w:
        raise MixedAction("Part-swapping automorphism with cycles inside one part")
    for cycle in phi.cycles():
        in_v = sum(1 for k in cycle if k < phi.n)
        if 2 * in_v != len(cycle):
            raise MixedAction(f"Cycle of length {len(cycle)} does not alternate parts")


def _describe(side: _Side) -> str:
    if side.empty:
        return "none"
    return ", ".join(
        f"{count} fixed" if length == 1 else f"{count}x{length}-cycle"
        for length, count in sorted(side.exceptional.items())
    )


def match_cases(phi: BipartiteAutomorphism) -> RealizabilityVerdict:
    """
    Match the cycle structure of phi against the nine realizable patterns.

    All vertices outside the listed exceptions must lie in r-cycles, r = order(phi).
    Every matching template is reported; one-sided templates are tried with V and W
    in both roles.

    Raises:
        NTooSmall: when n <= 2.
    """
    if phi.n <= 2:
        raise NTooSmall(f"n must be greater than 2, got {phi.n}")

    r = order(phi)
    if r == 1:
        return RealizabilityVerdict(1, (CaseMatch(1),), ("identity: induced by the identity diffeomorphism",))

    cs = cycle_structure(phi)
    _check_balance(phi, cs)

    v = _exceptional(cs.v_cycles, cs.fixed_v, r)
    w = _exceptional(cs.w_cycles, cs.fixed_w, r)
    mixed = Counter(length for length in cs.mixed_cycles if length != r)

    matches = []
    if not mixed:
        for case_id, params in _two_sided(r, v, w):
            matches.append(CaseMatch(case_id, False, params))
        for swapped, (first, second) in ((False, (v, w)), (True, (w, v))):
            for case_id, params in _one_sided(r, first, second):
                matches.append(CaseMatch(case_id, swapped, params))
    elif phi.swaps_parts and dict(mixed) == {4: 1}:
        matches.append(CaseMatch(9))

    matches.sort(key=lambda m: (m.case_id, m.parts_swapped_for_match))

    diagnostics = []
    if not matches:
        diagnostics.append(
            f"order {r}: exceptional cycles V: {_describe(v)}; W: {_describe(w)}; "
            f"mixed: {', '.join(f'{c}x{l}-cycle' for l, c in sorted(mixed.items())) or 'none'}"
        )
        if 1 in v.exceptional and len(v.exceptional) > 1 or 1 in w.exceptional and len(w.exceptional) > 1:
            diagnostics.append("fixed vertices combined with other exceptional cycles match no template")
    log.debug(f"match_cases order={r} matches={[m.case_id for m in matches]}")
    return RealizabilityVerdict(r, tuple(matches), tuple(diagnostics))
