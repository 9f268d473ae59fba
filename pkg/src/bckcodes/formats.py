"""Text file formats for codes and tables, plus element labels.

Code file: first significant line is the header ``n q m``; the next m lines
hold q space-separated decimal symbols each.  Table file: first significant
line is ``r``; the next r lines hold r space-separated element indices.
Lines starting with ``#`` and blank lines are ignored in both formats.
All formats are index-first; the labels (theta, a_1, a_2, ...) are generated
for human-readable rendering and never parsed.
"""

from __future__ import annotations

from typing import Sequence

from .algebra import CayleyTable
from .codes import BlockCode
from .errors import ParseError

ZERO_LABEL = "θ"  # theta


def element_label(i: int) -> str:
    return ZERO_LABEL if i == 0 else f"a_{i}"


def _significant_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            out.append((lineno, stripped))
    return out


def _parse_ints(line: str, lineno: int, expected: int | None, what: str) -> list[int]:
    tokens = line.split()
    if expected is not None and len(tokens) != expected:
        raise ParseError(
            f"expected {expected} {what}(s), found {len(tokens)}", line=lineno
        )
    values = []
    for tok in tokens:
        column = line.index(tok) + 1  # best effort for repeated tokens
        try:
            value = int(tok)
        except ValueError:
            raise ParseError(f"{what} {tok!r} is not an integer", line=lineno, column=column)
        if value < 0:
            raise ParseError(f"{what} must be non-negative", line=lineno, column=column)
        values.append(value)
    return values


def parse_code_file(text: str) -> BlockCode:
    lines = _significant_lines(text)
    if not lines:
        raise ParseError("empty code file", line=1)
    lineno, header = lines[0]
    n, q, m = _parse_ints(header, lineno, 3, "header field")
    body = lines[1:]
    if len(body) != m:
        raise ParseError(
            f"header declares m={m} words but the file has {len(body)}", line=lineno
        )
    words = []
    for wordno, (ln, line) in enumerate(body, start=1):
        symbols = _parse_ints(line, ln, q, "symbol")
        for pos, s in enumerate(symbols, start=1):
            if s >= n:
                raise ParseError(
                    f"symbol {s} at word {wordno} exceeds the declared alphabet 0..{n - 1}",
                    line=ln,
                    column=line.index(str(s)) + 1,
                )
        words.append(tuple(symbols))
    try:
        return BlockCode(n=n, length=q, words=tuple(words))
    except ValueError as exc:
        raise ParseError(str(exc), line=lineno)


def serialize_code_file(code: BlockCode) -> str:
    lines = [f"{code.n} {code.length} {code.m}"]
    lines.extend(" ".join(str(s) for s in w) for w in code.words)
    return "\n".join(lines) + "\n"


def parse_table_file(text: str) -> CayleyTable:
    lines = _significant_lines(text)
    if not lines:
        raise ParseError("empty table file", line=1)
    lineno, header = lines[0]
    (r,) = _parse_ints(header, lineno, 1, "header field")
    if r < 1:
        raise ParseError("table size must be >= 1", line=lineno)
    body = lines[1:]
    if len(body) != r:
        raise ParseError(
            f"header declares size {r} but the file has {len(body)} rows", line=lineno
        )
    rows = []
    for ln, line in body:
        entries = _parse_ints(line, ln, r, "entry")
        for v in entries:
            if v >= r:
                raise ParseError(
                    f"entry {v} out of range 0..{r - 1}",
                    line=ln,
                    column=line.index(str(v)) + 1,
                )
        rows.append(tuple(entries))
    return CayleyTable(entries=tuple(rows))


def serialize_table_file(t: CayleyTable) -> str:
    lines = [str(t.size)]
    lines.extend(" ".join(str(v) for v in row) for row in t.entries)
    return "\n".join(lines) + "\n"


def render_table_grid(t: CayleyTable, *, labeled: bool = True) -> str:
    """Aligned human-readable grid, optionally with theta/a_i labels."""
    if labeled:
        cells = [["*"] + [element_label(j) for j in range(t.size)]]
        cells.extend(
            [element_label(i)] + [element_label(v) for v in row]
            for i, row in enumerate(t.entries)
        )
    else:
        cells = [[str(v) for v in row] for row in t.entries]
    widths = [max(len(row[c]) for row in cells) for c in range(len(cells[0]))]
    return "\n".join(
        "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in cells
    )


def render_words(words: Sequence[Sequence[int]], *, digits: bool = False) -> list[str]:
    """Render codewords as space-separated symbols, or as digit strings when
    every symbol is below 10 and digits=True."""
    if digits and all(s < 10 for w in words for s in w):
        return ["".join(str(s) for s in w) for w in words]
    return [" ".join(str(s) for s in w) for w in words]
