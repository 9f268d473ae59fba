"""n-ary block codes and the admissibility rules the matrix construction needs.

A block code is an ordered list of equal-length words over the alphabet
{0, .., n-1}.  Codes fed to the construction must use only symbols
1..n-1 and satisfy the structural rules R1-R6 below.

Indexing convention: word positions and word numbers are 1-based in every
report and error message, matching the usual presentation of such codes.
Internally everything is 0-based; this module is the single place where
the translation happens.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DuplicateWordError

Codeword = tuple[int, ...]

#: Rule identifiers used in validation reports.
RULE_NONEMPTY = "R0"       # the code has at least one word
RULE_SYMBOL_RANGE = "R1"   # symbols lie in 1..n-1
RULE_NONINCREASING = "R2"  # symbols never increase left to right
RULE_SELF_INDEX = "R3"     # the symbol at position w[k] is at most k
RULE_TRAILING_ONES = "R4"  # positions n and beyond carry symbol 1
RULE_ASCENDING = "R5"      # words are pairwise distinct and lex-ascending
RULE_DOMINANCE = "R6"      # consecutive words never decrease at any position


@dataclass(frozen=True)
class BlockCode:
    """m codewords of a common length over the alphabet {0..n-1}."""

    n: int
    length: int
    words: tuple[Codeword, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("alphabet size must be >= 2")
        if self.length < 1:
            raise ValueError("codeword length must be >= 1")
        for i, w in enumerate(self.words):
            if len(w) != self.length:
                raise ValueError(
                    f"word {i + 1} has length {len(w)}, expected {self.length}"
                )
            for j, s in enumerate(w):
                if not 0 <= s < self.n:
                    raise ValueError(
                        f"word {i + 1} position {j + 1}: symbol {s} "
                        f"outside alphabet 0..{self.n - 1}"
                    )

    @classmethod
    def from_words(cls, n: int, words: Iterable[Sequence[int]], length: int | None = None) -> "BlockCode":
        ws = tuple(tuple(int(s) for s in w) for w in words)
        if length is None:
            if not ws:
                raise ValueError("length is required for an empty code")
            length = len(ws[0])
        return cls(n=n, length=length, words=ws)

    @property
    def m(self) -> int:
        return len(self.words)


@dataclass(frozen=True)
class ValidationFailure:
    """One broken rule; word and position are 1-based (0 = not applicable)."""

    rule: str
    word: int
    position: int


@dataclass(frozen=True)
class ValidationReport:
    admissible: bool
    failures: tuple[ValidationFailure, ...]

    @classmethod
    def from_failures(cls, failures: list[ValidationFailure]) -> "ValidationReport":
        return cls(admissible=not failures, failures=tuple(failures))


def lex_compare(u: Sequence[int], v: Sequence[int]) -> int:
    """Standard lexicographic comparison of equal-length words: -1, 0 or 1."""
    if len(u) != len(v):
        raise ValueError(f"cannot compare words of lengths {len(u)} and {len(v)}")
    for a, b in zip(u, v):
        if a != b:
            return -1 if a < b else 1
    return 0


def sort_ascending(code: BlockCode) -> BlockCode:
    """Return the code with words sorted lex-ascending; duplicates are an error."""
    ws = sorted(code.words)
    for prev, cur in zip(ws, ws[1:]):
        if prev == cur:
            raise DuplicateWordError(f"duplicate codeword {cur}")
    return BlockCode(n=code.n, length=code.length, words=tuple(ws))


def _word_failures(w: Codeword, n: int, q: int, index: int) -> list[ValidationFailure]:
    out: list[ValidationFailure] = []
    for j, s in enumerate(w, start=1):
        if not 1 <= s <= n - 1:
            out.append(ValidationFailure(RULE_SYMBOL_RANGE, index, j))
    for j in range(2, q + 1):
        if w[j - 1] > w[j - 2]:
            out.append(ValidationFailure(RULE_NONINCREASING, index, j))
    # Self-index rule: for each k, the position named by the k-th symbol must
    # exist and carry a symbol <= k.  A named position beyond the word is a
    # failure, not a vacuous pass: such words break the constructed algebra.
    for k in range(1, min(n - 1, q) + 1):
        p = w[k - 1]
        if p < 1 or p > q or w[p - 1] > k:
            out.append(ValidationFailure(RULE_SELF_INDEX, index, k))
    for j in range(n, q + 1):
        if w[j - 1] != 1:
            out.append(ValidationFailure(RULE_TRAILING_ONES, index, j))
    return out


def validate_admissible(code: BlockCode) -> ValidationReport:
    """Check every admissibility rule and report every failure.

    Per word: R1 symbols in 1..n-1; R2 non-increasing; R3 self-index
    (the symbol at 1-based position w[k] is <= k, for k up to min(n-1, q));
    R4 positions >= n carry symbol 1.  Per code: R5 words distinct and
    lex-ascending; R6 consecutive words are positionwise non-decreasing.

    R6 is what makes consecutive codeword rows of the constructed table
    comparable; without it lex-ascending codes exist whose tables fail the
    first axiom.
    """
    failures: list[ValidationFailure] = []
    if code.m == 0:
        failures.append(ValidationFailure(RULE_NONEMPTY, 0, 0))
        return ValidationReport.from_failures(failures)
    for i, w in enumerate(code.words, start=1):
        failures.extend(_word_failures(w, code.n, code.length, i))
    for i in range(1, code.m):
        prev, cur = code.words[i - 1], code.words[i]
        if lex_compare(prev, cur) >= 0:
            failures.append(ValidationFailure(RULE_ASCENDING, i + 1, 0))
        for j in range(1, code.length + 1):
            if cur[j - 1] < prev[j - 1]:
                failures.append(ValidationFailure(RULE_DOMINANCE, i + 1, j))
    return ValidationReport.from_failures(failures)
