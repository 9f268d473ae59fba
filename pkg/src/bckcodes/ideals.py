"""Right ideals, subalgebras and closed right ideals of a finite table.

A subset I is right-stable when x in I and y anywhere imply x*y in I;
it is a subalgebra when x, y in I imply x*y in I; a closed right ideal
additionally contains the zero element.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .algebra import CayleyTable
from .errors import SearchCapExceeded

#: Default size cap for full ideal enumeration (2^(r-1) subsets).
ENUMERATION_CAP = 20

#: Attached to candidate-subset reports: the index family below is checked,
#: never assumed.  It fails on some constructed tables, so callers must read
#: the computed verdict rather than trust the shape.
CANDIDATE_NOTE = (
    "the family {0, 1, r-m, .., r-1} is a falsifiable candidate, not an "
    "established invariant of the construction; the verdict reflects this "
    "table only"
)


@dataclass(frozen=True)
class IdealReport:
    """Verdicts for one subset, with every failing (x, y, x*y) triple."""

    members: tuple[int, ...]
    contains_zero: bool
    right_ideal: bool
    subalgebra: bool
    closed_right_ideal: bool
    right_ideal_witnesses: tuple[tuple[int, int, int], ...]
    subalgebra_witnesses: tuple[tuple[int, int, int], ...]


def check_subset(t: CayleyTable, members: Iterable[int]) -> IdealReport:
    """Evaluate the three predicates exhaustively for one subset."""
    r = t.size
    mset = frozenset(int(x) for x in members)
    for x in mset:
        if not 0 <= x < r:
            raise ValueError(f"subset member {x} out of range 0..{r - 1}")
    e = t.entries
    ordered = tuple(sorted(mset))
    right_fail = [
        (x, y, e[x][y]) for x in ordered for y in range(r) if e[x][y] not in mset
    ]
    sub_fail = [
        (x, y, e[x][y]) for x in ordered for y in ordered if e[x][y] not in mset
    ]
    contains_zero = 0 in mset
    right_ideal = not right_fail
    subalgebra = not sub_fail
    return IdealReport(
        members=ordered,
        contains_zero=contains_zero,
        right_ideal=right_ideal,
        subalgebra=subalgebra,
        closed_right_ideal=contains_zero and right_ideal and subalgebra,
        right_ideal_witnesses=tuple(right_fail),
        subalgebra_witnesses=tuple(sub_fail),
    )


def _is_closed_right_ideal(e, r: int, mset: frozenset[int]) -> bool:
    # fast path for enumeration: stop at the first escaping product
    for x in mset:
        row = e[x]
        for y in range(r):
            if row[y] not in mset:
                return False
    return True


def enumerate_closed_right_ideals(
    t: CayleyTable, *, max_size: int | None = None, cap: int = ENUMERATION_CAP
) -> list[tuple[int, ...]]:
    """All closed right ideals, ascending by size then lexicographically.

    Without max_size the search visits every zero-containing subset, so
    tables larger than the cap are refused rather than silently slow.
    """
    r = t.size
    if max_size is None and r > cap:
        raise SearchCapExceeded(
            f"ideal enumeration refused: size {r} exceeds cap {cap}; "
            "pass max_size to bound the search"
        )
    largest = r if max_size is None else min(max_size, r)
    if largest < 1:
        return []
    e = t.entries
    others = range(1, r)
    found: list[tuple[int, ...]] = []
    for k in range(0, largest):
        for extra in combinations(others, k):
            mset = frozenset((0,) + extra)
            if _is_closed_right_ideal(e, r, mset):
                found.append((0,) + extra)
    return found


def candidate_subset(size: int, m: int) -> tuple[int, ...]:
    """The index family {0, 1} united with the top m elements of a size-r table."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m >= size:
        raise ValueError(f"m = {m} must be smaller than the table size {size}")
    return tuple(sorted({0, 1} | set(range(size - m, size))))


@dataclass(frozen=True)
class CandidateReport:
    subset: tuple[int, ...]
    report: IdealReport
    note: str


def check_candidate(t: CayleyTable, m: int) -> CandidateReport:
    """Materialize the candidate family for a table built from m words and check it.

    The verdict is whatever the table says; the note marks the family as a
    conjectured shape rather than a guarantee.
    """
    subset = candidate_subset(t.size, m)
    return CandidateReport(subset=subset, report=check_subset(t, subset), note=CANDIDATE_NOTE)
