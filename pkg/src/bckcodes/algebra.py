"""Finite magmas with a distinguished zero, represented as full Cayley tables.

Every check in this module is an exhaustive scan over the (small) carrier,
so the verdicts are decision procedures rather than heuristics.  Elements
are always the indices 0..r-1; index 0 is the distinguished zero.  Symbolic
labels exist only at the serialization layer.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import SearchCapExceeded

#: Default size cap for the isomorphism search (9! permutations with pruning
#: is instant; beyond that the caller must raise the cap explicitly).
ISO_SEARCH_CAP = 10


class Axiom(enum.Enum):
    """Identifiers for the checkable axioms.

    "1".."4" are the BCI axioms, "5" is the extra BCK axiom (zero is a left
    annihilator), and "alt-1".."alt-3" are the three conditions of the
    equivalent BCK axiomatization.
    """

    A1 = "1"
    A2 = "2"
    A3 = "3"
    A4 = "4"
    A5 = "5"
    ALT1 = "alt-1"
    ALT2 = "alt-2"
    ALT3 = "alt-3"


#: Human-readable statement of each axiom, in element variables x, y, z.
AXIOM_TEXT = {
    Axiom.A1: "((x*y)*(x*z))*(z*y) = 0",
    Axiom.A2: "(x*(x*y))*y = 0",
    Axiom.A3: "x*x = 0",
    Axiom.A4: "x*y = 0 and y*x = 0 imply x = y",
    Axiom.A5: "0*x = 0",
    Axiom.ALT1: "((x*y)*(x*z))*(z*y) = 0",
    Axiom.ALT2: "x*(0*y) = x",
    Axiom.ALT3: "x*y = 0 and y*x = 0 imply x = y",
}


@dataclass(frozen=True)
class CayleyTable:
    """An r x r multiplication table over elements 0..r-1.

    entry(i, j) = entries[i][j] is the product i*j.  Immutable; safe to
    share across threads.
    """

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        r = len(self.entries)
        if r < 1:
            raise ValueError("table must have size >= 1")
        for i, row in enumerate(self.entries):
            if len(row) != r:
                raise ValueError(f"row {i} has length {len(row)}, expected {r}")
            for j, v in enumerate(row):
                if not 0 <= v < r:
                    raise ValueError(f"entry ({i},{j}) = {v} out of range 0..{r - 1}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "CayleyTable":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @property
    def size(self) -> int:
        return len(self.entries)

    def mul(self, i: int, j: int) -> int:
        return self.entries[i][j]


@dataclass(frozen=True)
class Violation:
    """One failed axiom instance: the axiom and the witnessing elements."""

    axiom: Axiom
    witness: tuple[int, ...]


@dataclass(frozen=True)
class AxiomReport:
    verdict: bool
    violations: tuple[Violation, ...]

    @classmethod
    def from_violations(cls, violations: list[Violation]) -> "AxiomReport":
        return cls(verdict=not violations, violations=tuple(violations))


@dataclass(frozen=True)
class OrderRelation:
    """The relation x <= y iff x*y = 0, with its basic order properties."""

    size: int
    leq: tuple[tuple[bool, ...], ...]
    reflexive: bool
    antisymmetric: bool
    transitive: bool

    def holds(self, x: int, y: int) -> bool:
        return self.leq[x][y]


def _scan_a1(e: Sequence[Sequence[int]], r: int, axiom: Axiom, out: list[Violation]) -> None:
    rng = range(r)
    for x in rng:
        ex = e[x]
        for y in rng:
            exy = ex[y]
            row_exy = e[exy]
            for z in rng:
                if e[row_exy[ex[z]]][e[z][y]] != 0:
                    out.append(Violation(axiom, (x, y, z)))


def _scan_a2(e: Sequence[Sequence[int]], r: int, out: list[Violation]) -> None:
    rng = range(r)
    for x in rng:
        ex = e[x]
        for y in rng:
            if e[ex[ex[y]]][y] != 0:
                out.append(Violation(Axiom.A2, (x, y)))


def _scan_a3(e: Sequence[Sequence[int]], r: int, out: list[Violation]) -> None:
    for x in range(r):
        if e[x][x] != 0:
            out.append(Violation(Axiom.A3, (x,)))


def _scan_antisymmetry(e: Sequence[Sequence[int]], r: int, axiom: Axiom, out: list[Violation]) -> None:
    for x in range(r):
        ex = e[x]
        for y in range(x + 1, r):
            if ex[y] == 0 and e[y][x] == 0:
                out.append(Violation(axiom, (x, y)))


def _scan_a5(e: Sequence[Sequence[int]], r: int, out: list[Violation]) -> None:
    row0 = e[0]
    for x in range(r):
        if row0[x] != 0:
            out.append(Violation(Axiom.A5, (x,)))


def _scan_alt2(e: Sequence[Sequence[int]], r: int, out: list[Violation]) -> None:
    row0 = e[0]
    for x in range(r):
        ex = e[x]
        for y in range(r):
            if ex[row0[y]] != x:
                out.append(Violation(Axiom.ALT2, (x, y)))


def check_bci(t: CayleyTable) -> AxiomReport:
    """Exhaustively check BCI axioms 1-4; list every failing instance."""
    e = t.entries
    r = t.size
    out: list[Violation] = []
    _scan_a1(e, r, Axiom.A1, out)
    _scan_a2(e, r, out)
    _scan_a3(e, r, out)
    _scan_antisymmetry(e, r, Axiom.A4, out)
    return AxiomReport.from_violations(out)


def check_bck(t: CayleyTable) -> AxiomReport:
    """Exhaustively check BCK axioms 1-5; list every failing instance."""
    e = t.entries
    r = t.size
    out: list[Violation] = []
    _scan_a1(e, r, Axiom.A1, out)
    _scan_a2(e, r, out)
    _scan_a3(e, r, out)
    _scan_antisymmetry(e, r, Axiom.A4, out)
    _scan_a5(e, r, out)
    return AxiomReport.from_violations(out)


def check_bck_alt(t: CayleyTable) -> AxiomReport:
    """Check the equivalent three-condition BCK axiomatization.

    Conditions: ((x*y)*(x*z))*(z*y) = 0, x*(0*y) = x, and antisymmetry.
    Agrees with check_bck on every table (exhaustively tested for order 3).
    """
    e = t.entries
    r = t.size
    out: list[Violation] = []
    _scan_a1(e, r, Axiom.ALT1, out)
    _scan_alt2(e, r, out)
    _scan_antisymmetry(e, r, Axiom.ALT3, out)
    return AxiomReport.from_violations(out)


def violation_holds(t: CayleyTable, axiom: Axiom, witness: Sequence[int]) -> bool:
    """Re-evaluate a reported witness; True iff it is a genuine violation."""
    e = t.entries
    if axiom in (Axiom.A1, Axiom.ALT1):
        x, y, z = witness
        return e[e[e[x][y]][e[x][z]]][e[z][y]] != 0
    if axiom is Axiom.A2:
        x, y = witness
        return e[e[x][e[x][y]]][y] != 0
    if axiom is Axiom.A3:
        (x,) = witness
        return e[x][x] != 0
    if axiom in (Axiom.A4, Axiom.ALT3):
        x, y = witness
        return x != y and e[x][y] == 0 and e[y][x] == 0
    if axiom is Axiom.A5:
        (x,) = witness
        return e[0][x] != 0
    if axiom is Axiom.ALT2:
        x, y = witness
        return e[x][e[0][y]] != x
    raise ValueError(f"unknown axiom {axiom!r}")


def is_commutative(t: CayleyTable) -> tuple[int, int] | None:
    """Check x*(x*y) = y*(y*x) for all pairs.

    Returns None when the identity holds, else the lexicographically
    smallest failing (x, y).  Meaningful for tables passing check_bck.
    """
    e = t.entries
    for x in range(t.size):
        ex = e[x]
        for y in range(t.size):
            if ex[ex[y]] != e[y][e[y][x]]:
                return (x, y)
    return None


def is_implicative(t: CayleyTable) -> tuple[int, int] | None:
    """Check x*(y*x) = x; None or the smallest failing (x, y)."""
    e = t.entries
    for x in range(t.size):
        ex = e[x]
        for y in range(t.size):
            if ex[e[y][x]] != x:
                return (x, y)
    return None


def is_positive_implicative(t: CayleyTable) -> tuple[int, int, int] | None:
    """Check (x*y)*z = (x*z)*(y*z); None or the smallest failing (x, y, z)."""
    e = t.entries
    rng = range(t.size)
    for x in rng:
        ex = e[x]
        for y in rng:
            exy = ex[y]
            row_exy = e[exy]
            ey = e[y]
            for z in rng:
                if row_exy[z] != e[ex[z]][ey[z]]:
                    return (x, y, z)
    return None


def partial_order(t: CayleyTable) -> OrderRelation:
    """Derive x <= y iff x*y = 0 and report reflexivity/antisymmetry/transitivity."""
    e = t.entries
    r = t.size
    leq = tuple(tuple(e[x][y] == 0 for y in range(r)) for x in range(r))
    reflexive = all(leq[x][x] for x in range(r))
    antisymmetric = all(
        not (leq[x][y] and leq[y][x]) for x in range(r) for y in range(r) if x != y
    )
    transitive = all(
        not (leq[x][y] and leq[y][z]) or leq[x][z]
        for x in range(r)
        for y in range(r)
        for z in range(r)
    )
    return OrderRelation(
        size=r, leq=leq, reflexive=reflexive, antisymmetric=antisymmetric, transitive=transitive
    )


def relabel(t: CayleyTable, perm: Sequence[int]) -> CayleyTable:
    """Apply a permutation of element indices: new[p(i)][p(j)] = p(old[i][j])."""
    r = t.size
    if sorted(perm) != list(range(r)):
        raise ValueError("perm must be a permutation of 0..r-1")
    e = t.entries
    rows = [[0] * r for _ in range(r)]
    for i in range(r):
        pi = perm[i]
        for j in range(r):
            rows[pi][perm[j]] = perm[e[i][j]]
    return CayleyTable.from_rows(rows)


def _zero_profile(t: CayleyTable) -> list[tuple[int, int]]:
    # zeros per row / per column are preserved by any isomorphism fixing 0
    e = t.entries
    r = t.size
    rowz = [sum(1 for v in e[x] if v == 0) for x in range(r)]
    colz = [sum(1 for x in range(r) if e[x][y] == 0) for y in range(r)]
    return list(zip(rowz, colz))


def are_isomorphic(
    a: CayleyTable, b: CayleyTable, *, cap: int = ISO_SEARCH_CAP
) -> tuple[int, ...] | None:
    """Search for a bijection sigma with sigma(0)=0 and sigma(x*y) = sigma(x)*'sigma(y).

    Returns the permutation (as a tuple mapping a-indices to b-indices) or
    None when the tables are provably non-isomorphic.  Raises
    SearchCapExceeded for sizes above the cap rather than guessing.
    """
    if a.size != b.size:
        return None
    r = a.size
    if r > cap:
        raise SearchCapExceeded(
            f"isomorphism search refused: size {r} exceeds cap {cap}"
        )
    pa, pb = _zero_profile(a), _zero_profile(b)
    if sorted(pa) != sorted(pb):
        return None
    if pa[0] != pb[0]:
        return None

    ea, eb = a.entries, b.entries
    sigma: list[int | None] = [None] * r
    inverse: list[int | None] = [None] * r
    sigma[0] = 0
    inverse[0] = 0

    def consistent() -> bool:
        # re-scan all assigned pairs; pending products only need a free slot
        for y in range(r):
            sy = sigma[y]
            if sy is None:
                continue
            row_y, brow = ea[y], eb[sy]
            for z in range(r):
                sz = sigma[z]
                if sz is None:
                    continue
                p = row_y[z]
                q = brow[sz]
                sp = sigma[p]
                if sp is not None:
                    if sp != q:
                        return False
                elif inverse[q] is not None:
                    return False
        return True

    def extend(x: int) -> bool:
        if x == r:
            return True
        for cand in range(r):
            if inverse[cand] is not None or pa[x] != pb[cand]:
                continue
            sigma[x] = cand
            inverse[cand] = x
            if consistent() and extend(x + 1):
                return True
            sigma[x] = None
            inverse[cand] = None
        return False

    if not extend(1):
        return None
    result = tuple(v for v in sigma if v is not None)
    # final gate: full verification, so pruning bugs can never yield a wrong map
    assert all(
        eb[result[x]][result[y]] == result[ea[x][y]] for x in range(r) for y in range(r)
    )
    return result
