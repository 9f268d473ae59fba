"""Exception types shared across the package."""

from __future__ import annotations


class ParseError(ValueError):
    """A file or payload could not be parsed; carries a 1-based location."""

    def __init__(self, message: str, *, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)


class DuplicateWordError(ValueError):
    """A block code contained the same codeword twice."""


class InadmissibleCodeError(ValueError):
    """A construction was asked to run on a code that fails validation."""

    def __init__(self, report):
        self.report = report
        rules = ", ".join(
            f"{f.rule} at word {f.word}, position {f.position}" for f in report.failures
        )
        super().__init__(f"code is not admissible: {rules}")


class ConstructionFailedError(RuntimeError):
    """The constructed table failed the BCK axioms; carries the AxiomReport."""

    def __init__(self, report):
        self.report = report
        first = report.violations[0] if report.violations else None
        detail = f"; first violation: axiom {first.axiom.value} at {first.witness}" if first else ""
        super().__init__(f"constructed table is not a BCK-algebra{detail}")


class SearchCapExceeded(RuntimeError):
    """An exhaustive search was refused because the instance exceeds the cap."""
