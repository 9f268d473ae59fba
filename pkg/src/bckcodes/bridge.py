"""Constructions between block codes and zero-rooted finite algebras.

Forward direction: an admissible code V with m words of length q over an
n-symbol alphabet becomes a lower-triangular r x r matrix whose rows are a
chain block followed by the codewords; reading the matrix as a Cayley table
yields a BCK-algebra whose generated code contains V.

Reverse direction: any table plus a sequence of evaluation points yields one
codeword per element via cut functions (plain table lookups), and the set of
all such codewords is the generated block code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import AxiomReport, CayleyTable, check_bck
from .codes import BlockCode, Codeword, validate_admissible
from .errors import ConstructionFailedError, InadmissibleCodeError

CASE_SHORT = "q<n"   # sizing r = n-1+m, chain block of n-1 elements
CASE_LONG = "q>=n"   # sizing r = m+q+1, chain block of q+1 elements


@dataclass(frozen=True)
class ConstructionParams:
    """Sizing of the constructed table: total size r and chain block size c."""

    case: str
    size: int
    chain: int

    @property
    def words(self) -> int:
        return self.size - self.chain


def construction_params(n: int, q: int, m: int) -> ConstructionParams:
    """Pure sizing arithmetic for an n-ary code of m words of length q.

    The chain block must be large enough that every codeword row sits
    strictly below its own diagonal entry (c > q) and that every symbol
    indexes a chain element; hence the short sizing applies only while
    q < n-1, not q < n.  At q = n-1 the short sizing would clip the first
    codeword on the diagonal and lose it from the generated code.
    """
    if n < 2:
        raise ValueError("alphabet size must be >= 2")
    if q < 1:
        raise ValueError("codeword length must be >= 1")
    if m < 1:
        raise ValueError("code must contain at least one word")
    if q < n - 1:
        return ConstructionParams(case=CASE_SHORT, size=n - 1 + m, chain=n - 1)
    return ConstructionParams(case=CASE_LONG, size=m + q + 1, chain=q + 1)


def dimension(code: BlockCode, *, validate: bool = True) -> ConstructionParams:
    """Sizing for a concrete code; rejects inadmissible codes unless told not to."""
    if validate:
        report = validate_admissible(code)
        if not report.admissible:
            raise InadmissibleCodeError(report)
    return construction_params(code.n, code.length, code.m)


@dataclass(frozen=True)
class AssociatedMatrix:
    """The constructed table plus its sizing and the code it came from."""

    table: CayleyTable
    params: ConstructionParams
    code: BlockCode


def build_matrix(code: BlockCode, *, validate: bool = True) -> AssociatedMatrix:
    """Build the lower-triangular matrix for a code.

    Row 0 is all zeros; column 0 equals the row index; chain rows
    1..c-1 carry 1 strictly below the diagonal; codeword row c+i-1 carries
    word i in columns 1..q, then 1 up to the diagonal, then 0.

    validate=False skips the admissibility gate (the matrix is still well
    formed for any structurally valid code) so that tables of inadmissible
    codes can be examined; such tables need not satisfy the BCK axioms.
    """
    params = dimension(code, validate=validate)
    r, c, q = params.size, params.chain, code.length
    rows = [[0] * r]
    for s in range(1, c):
        row = [0] * r
        row[0] = s
        for t in range(1, s):
            row[t] = 1
        rows.append(row)
    for i, w in enumerate(code.words):
        s = c + i
        row = [0] * r
        row[0] = s
        row[1 : q + 1] = w
        for t in range(q + 1, s):
            row[t] = 1
        rows.append(row)
    return AssociatedMatrix(table=CayleyTable.from_rows(rows), params=params, code=code)


def build_algebra(code: BlockCode, *, validate: bool = True) -> CayleyTable:
    """Build the matrix and certify it as a BCK-algebra.

    Raises ConstructionFailedError carrying the axiom report if the table
    fails; unreachable for admissible codes.
    """
    table = build_matrix(code, validate=validate).table
    report = check_bck(table)
    if not report.verdict:
        raise ConstructionFailedError(report)
    return table


def cut_codeword(t: CayleyTable, element: int, points: Sequence[int]) -> Codeword:
    """The codeword of one element: symbol at position j is element * points[j]."""
    r = t.size
    if not 0 <= element < r:
        raise ValueError(f"element {element} out of range 0..{r - 1}")
    for p in points:
        if not 0 <= p < r:
            raise ValueError(f"evaluation point {p} out of range 0..{r - 1}")
    row = t.entries[element]
    return tuple(row[p] for p in points)


def generate_code(t: CayleyTable, points: Sequence[int]) -> BlockCode:
    """Collect the cut codewords of every element, deduplicated and sorted.

    The resulting alphabet is the table size: symbols are element indices.
    """
    if not points:
        raise ValueError("at least one evaluation point is required")
    words = {cut_codeword(t, s, points) for s in range(t.size)}
    return BlockCode(n=t.size, length=len(points), words=tuple(sorted(words)))


def default_points(q: int) -> tuple[int, ...]:
    """The evaluation points 1..q used by the containment roundtrip."""
    return tuple(range(1, q + 1))


@dataclass(frozen=True)
class RoundtripReport:
    params: ConstructionParams
    bck: AxiomReport
    generated: BlockCode
    contained: bool
    missing: tuple[Codeword, ...]


def roundtrip_check(code: BlockCode, *, validate: bool = True) -> RoundtripReport:
    """Build the algebra, regenerate a code at points 1..q, check containment."""
    matrix = build_matrix(code, validate=validate)
    report = check_bck(matrix.table)
    if validate and not report.verdict:
        raise ConstructionFailedError(report)
    generated = generate_code(matrix.table, default_points(code.length))
    present = set(generated.words)
    missing = tuple(w for w in code.words if w not in present)
    return RoundtripReport(
        params=matrix.params,
        bck=report,
        generated=generated,
        contained=not missing,
        missing=missing,
    )
