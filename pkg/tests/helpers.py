"""Shared reference data and independent oracles for the test suite.

The frozen grids below are transcribed construction outputs used as
bit-exact expectations.  The naive checkers and the word filter are written
independently of the package internals so the two implementations
cross-validate each other.
"""

from __future__ import annotations

import random
from itertools import combinations_with_replacement

from bckcodes import BlockCode, CayleyTable

# A 4-element BCK-algebra (zero, a, b, c) used throughout: a <= b, c incomparable.
SAMPLE4 = CayleyTable.from_rows(
    [
        [0, 0, 0, 0],
        [1, 0, 0, 1],
        [2, 1, 0, 2],
        [3, 3, 3, 0],
    ]
)

# Code over a 7-symbol alphabet, three words of length 4.
CODE7 = BlockCode(n=7, length=4, words=((3, 2, 1, 1), (4, 2, 2, 1), (4, 3, 2, 1)))
MATRIX7 = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [2, 1, 0, 0, 0, 0, 0, 0, 0],
    [3, 1, 1, 0, 0, 0, 0, 0, 0],
    [4, 1, 1, 1, 0, 0, 0, 0, 0],
    [5, 1, 1, 1, 1, 0, 0, 0, 0],
    [6, 3, 2, 1, 1, 1, 0, 0, 0],
    [7, 4, 2, 2, 1, 1, 1, 0, 0],
    [8, 4, 3, 2, 1, 1, 1, 1, 0],
]
GENERATED7 = {
    (0, 0, 0, 0),
    (1, 0, 0, 0),
    (1, 1, 0, 0),
    (1, 1, 1, 0),
    (1, 1, 1, 1),
    (3, 2, 1, 1),
    (4, 2, 2, 1),
    (4, 3, 2, 1),
}

# Code over a 4-symbol alphabet, three words of length 5.
CODE4_SMALL = BlockCode(
    n=4, length=5, words=((2, 1, 1, 1, 1), (3, 2, 1, 1, 1), (3, 3, 1, 1, 1))
)
MATRIX4_SMALL = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [2, 1, 0, 0, 0, 0, 0, 0, 0],
    [3, 1, 1, 0, 0, 0, 0, 0, 0],
    [4, 1, 1, 1, 0, 0, 0, 0, 0],
    [5, 1, 1, 1, 1, 0, 0, 0, 0],
    [6, 2, 1, 1, 1, 1, 0, 0, 0],
    [7, 3, 2, 1, 1, 1, 1, 0, 0],
    [8, 3, 3, 1, 1, 1, 1, 1, 0],
]
GENERATED4_SMALL = {
    (0, 0, 0, 0, 0),
    (1, 0, 0, 0, 0),
    (1, 1, 0, 0, 0),
    (1, 1, 1, 0, 0),
    (1, 1, 1, 1, 0),
    (2, 1, 1, 1, 1),
    (3, 2, 1, 1, 1),
    (3, 3, 1, 1, 1),
}

# Code over a 4-symbol alphabet, five words of length 5.  The third word
# (31111) breaks the self-index rule, so this code is not admissible and its
# table is not a BCK-algebra; the table itself is still well defined.
CODE4_LARGE = BlockCode(
    n=4,
    length=5,
    words=(
        (1, 1, 1, 1, 1),
        (2, 1, 1, 1, 1),
        (3, 1, 1, 1, 1),
        (3, 2, 1, 1, 1),
        (3, 3, 1, 1, 1),
    ),
)
MATRIX4_LARGE = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [3, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [4, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [5, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
    [6, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0],
    [7, 2, 1, 1, 1, 1, 1, 0, 0, 0, 0],
    [8, 3, 1, 1, 1, 1, 1, 1, 0, 0, 0],
    [9, 3, 2, 1, 1, 1, 1, 1, 1, 0, 0],
    [10, 3, 3, 1, 1, 1, 1, 1, 1, 1, 0],
]
GENERATED4_LARGE = {
    (0, 0, 0, 0, 0),
    (1, 0, 0, 0, 0),
    (1, 1, 0, 0, 0),
    (1, 1, 1, 0, 0),
    (1, 1, 1, 1, 0),
    (1, 1, 1, 1, 1),
    (2, 1, 1, 1, 1),
    (3, 1, 1, 1, 1),
    (3, 2, 1, 1, 1),
    (3, 3, 1, 1, 1),
}

# Lex-ascending but not positionwise dominance-ordered: passes R1-R5,
# fails R6, and its table violates the first axiom.
CODE_CROSSING = BlockCode(n=5, length=4, words=((3, 3, 1, 1), (4, 2, 2, 1)))


def naive_bck(entries) -> bool:
    """Literal quantifier translation of the five axioms; no shortcuts."""
    r = len(entries)

    def mul(i, j):
        return entries[i][j]

    for x in range(r):
        for y in range(r):
            for z in range(r):
                if mul(mul(mul(x, y), mul(x, z)), mul(z, y)) != 0:
                    return False
    for x in range(r):
        for y in range(r):
            if mul(mul(x, mul(x, y)), y) != 0:
                return False
    for x in range(r):
        if mul(x, x) != 0:
            return False
    for x in range(r):
        for y in range(r):
            if x != y and mul(x, y) == 0 and mul(y, x) == 0:
                return False
    for x in range(r):
        if mul(0, x) != 0:
            return False
    return True


def word_admissible(w, n: int, q: int) -> bool:
    """Independent word filter mirroring rules R1-R4."""
    if any(not 1 <= s <= n - 1 for s in w):
        return False
    if any(w[j] > w[j - 1] for j in range(1, q)):
        return False
    for k in range(1, min(n - 1, q) + 1):
        p = w[k - 1]
        if p > q or w[p - 1] > k:
            return False
    return all(w[j - 1] == 1 for j in range(n, q + 1))


def admissible_words(n: int, q: int) -> list[tuple[int, ...]]:
    """All admissible words for one (n, q), lexicographically sorted."""
    out = []
    for combo in combinations_with_replacement(range(1, n), q):
        w = tuple(sorted(combo, reverse=True))
        if word_admissible(w, n, q):
            out.append(w)
    return sorted(set(out))


def dominates(u, v) -> bool:
    """True when u is positionwise >= v."""
    return all(a >= b for a, b in zip(u, v))


def random_admissible_code(
    rng: random.Random,
    *,
    n_range=(3, 7),
    q_range=(2, 6),
    m_range=(1, 5),
) -> BlockCode:
    """A random admissible code: a dominance chain of admissible words."""
    while True:
        n = rng.randint(*n_range)
        q = rng.randint(*q_range)
        pool = admissible_words(n, q)
        m_target = rng.randint(m_range[0], m_range[1])
        chain = [rng.choice(pool)]
        while len(chain) < m_target:
            ups = [w for w in pool if w != chain[-1] and dominates(w, chain[-1])]
            if not ups:
                break
            chain.append(rng.choice(ups))
        if len(chain) >= m_range[0]:
            return BlockCode(n=n, length=q, words=tuple(sorted(chain)))


def random_table(rng: random.Random, size: int) -> CayleyTable:
    """A uniformly random table (almost never a BCK-algebra)."""
    return CayleyTable.from_rows(
        [[rng.randrange(size) for _ in range(size)] for _ in range(size)]
    )


def random_zero_fixing_permutation(rng: random.Random, size: int) -> list[int]:
    rest = list(range(1, size))
    rng.shuffle(rest)
    return [0] + rest
