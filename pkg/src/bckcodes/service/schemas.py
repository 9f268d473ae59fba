"""Request and response models.

These models are the machine-readable contract: the HTTP endpoints consume
and produce them, and the CLI's --format json output is exactly the response
model of the matching endpoint.  Field names are stable.
"""

from __future__ import annotations

from pydantic import BaseModel, Field

from .. import algebra, bridge, codes, ideals


class CodePayload(BaseModel):
    """A block code: alphabet size, word length, and the words themselves."""

    alphabet: int = Field(ge=2, description="alphabet size n; symbols are 0..n-1")
    length: int = Field(ge=1, description="codeword length q")
    words: list[list[int]]

    def to_code(self) -> codes.BlockCode:
        return codes.BlockCode(
            n=self.alphabet, length=self.length, words=tuple(tuple(w) for w in self.words)
        )

    @classmethod
    def from_code(cls, code: codes.BlockCode) -> "CodePayload":
        return cls(alphabet=code.n, length=code.length, words=[list(w) for w in code.words])


class TablePayload(BaseModel):
    """A Cayley table as a square grid of element indices."""

    entries: list[list[int]]

    def to_table(self) -> algebra.CayleyTable:
        return algebra.CayleyTable.from_rows(self.entries)


class RuleFailure(BaseModel):
    rule: str
    word: int = Field(description="1-based word number; 0 when not applicable")
    position: int = Field(description="1-based position; 0 when not applicable")


class ValidationOut(BaseModel):
    admissible: bool
    failures: list[RuleFailure]

    @classmethod
    def from_report(cls, report: codes.ValidationReport) -> "ValidationOut":
        return cls(
            admissible=report.admissible,
            failures=[
                RuleFailure(rule=f.rule, word=f.word, position=f.position)
                for f in report.failures
            ],
        )


class ParamsOut(BaseModel):
    case: str
    size: int
    chain: int


class AxiomViolationOut(BaseModel):
    axiom: str
    witness: list[int]


class AxiomsOut(BaseModel):
    passed: bool
    violations: list[AxiomViolationOut]

    @classmethod
    def from_report(cls, report: algebra.AxiomReport) -> "AxiomsOut":
        return cls(
            passed=report.verdict,
            violations=[
                AxiomViolationOut(axiom=v.axiom.value, witness=list(v.witness))
                for v in report.violations
            ],
        )


class BuildIn(BaseModel):
    code: CodePayload
    validate_code: bool = Field(
        default=True,
        description="reject inadmissible codes; set false to build their tables anyway",
    )


class BuildOut(BaseModel):
    admissible: bool
    failures: list[RuleFailure]
    params: ParamsOut | None = None
    matrix: list[list[int]] | None = None
    bck: AxiomsOut | None = None


class PropertyOut(BaseModel):
    holds: bool
    witness: list[int] | None = None


class OrderOut(BaseModel):
    reflexive: bool
    antisymmetric: bool
    transitive: bool


class VerifyIn(BaseModel):
    table: TablePayload
    axioms: str = Field(default="bck", pattern="^(bci|bck|bck-alt)$")
    properties: bool = False


class VerifyOut(BaseModel):
    axioms: str
    passed: bool
    violations: list[AxiomViolationOut]
    commutative: PropertyOut | None = None
    implicative: PropertyOut | None = None
    positive_implicative: PropertyOut | None = None
    order: OrderOut | None = None


class GenerateIn(BaseModel):
    table: TablePayload
    points: list[int] = Field(min_length=1)


class GenerateOut(BaseModel):
    alphabet: int
    length: int
    words: list[list[int]]
    max_symbol: int = Field(description="largest symbol actually used")


class RoundtripOut(BaseModel):
    admissible: bool
    failures: list[RuleFailure]
    stage_failed: str | None = Field(
        default=None, description="first failing stage: validate, bck or containment"
    )
    params: ParamsOut | None = None
    bck: AxiomsOut | None = None
    generated: GenerateOut | None = None
    contained: bool | None = None
    missing: list[list[int]] | None = None


class IdealWitnessOut(BaseModel):
    x: int
    y: int
    product: int


class SubsetIn(BaseModel):
    table: TablePayload
    members: list[int]


class SubsetOut(BaseModel):
    members: list[int]
    contains_zero: bool
    right_ideal: bool
    subalgebra: bool
    closed_right_ideal: bool
    right_ideal_witnesses: list[IdealWitnessOut]
    subalgebra_witnesses: list[IdealWitnessOut]
    note: str | None = None

    @classmethod
    def from_report(cls, report: ideals.IdealReport, note: str | None = None) -> "SubsetOut":
        return cls(
            members=list(report.members),
            contains_zero=report.contains_zero,
            right_ideal=report.right_ideal,
            subalgebra=report.subalgebra,
            closed_right_ideal=report.closed_right_ideal,
            right_ideal_witnesses=[
                IdealWitnessOut(x=x, y=y, product=p) for x, y, p in report.right_ideal_witnesses
            ],
            subalgebra_witnesses=[
                IdealWitnessOut(x=x, y=y, product=p) for x, y, p in report.subalgebra_witnesses
            ],
            note=note,
        )


class EnumerateIn(BaseModel):
    table: TablePayload
    max_size: int | None = Field(default=None, ge=1)


class EnumerateOut(BaseModel):
    count: int
    ideals: list[list[int]]


class CandidateIn(BaseModel):
    table: TablePayload
    m: int = Field(ge=1, description="number of codeword rows in the table")


class IsoIn(BaseModel):
    table_a: TablePayload
    table_b: TablePayload


class IsoOut(BaseModel):
    isomorphic: bool
    permutation: list[int] | None = None
