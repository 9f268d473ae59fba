"""One handler per operation; endpoints and CLI commands both call these.

Handlers take request models and return response models.  Malformed input
surfaces as ValueError (or a subclass); semantic verdicts are data in the
response, never exceptions.
"""

from __future__ import annotations

from .. import algebra, bridge, codes, ideals
from . import schemas


def validate_code(req: schemas.CodePayload) -> schemas.ValidationOut:
    return schemas.ValidationOut.from_report(codes.validate_admissible(req.to_code()))


def build(req: schemas.BuildIn) -> schemas.BuildOut:
    code = req.code.to_code()
    report = codes.validate_admissible(code)
    if req.validate_code and not report.admissible:
        return schemas.BuildOut(
            admissible=False,
            failures=schemas.ValidationOut.from_report(report).failures,
        )
    matrix = bridge.build_matrix(code, validate=False)
    return schemas.BuildOut(
        admissible=report.admissible,
        failures=schemas.ValidationOut.from_report(report).failures,
        params=schemas.ParamsOut(
            case=matrix.params.case, size=matrix.params.size, chain=matrix.params.chain
        ),
        matrix=[list(row) for row in matrix.table.entries],
        bck=schemas.AxiomsOut.from_report(algebra.check_bck(matrix.table)),
    )


_CHECKERS = {
    "bci": algebra.check_bci,
    "bck": algebra.check_bck,
    "bck-alt": algebra.check_bck_alt,
}


def verify(req: schemas.VerifyIn) -> schemas.VerifyOut:
    table = req.table.to_table()
    report = _CHECKERS[req.axioms](table)
    out = schemas.VerifyOut(
        axioms=req.axioms,
        passed=report.verdict,
        violations=schemas.AxiomsOut.from_report(report).violations,
    )
    if req.properties:
        comm = algebra.is_commutative(table)
        impl = algebra.is_implicative(table)
        pos = algebra.is_positive_implicative(table)
        order = algebra.partial_order(table)
        out.commutative = schemas.PropertyOut(
            holds=comm is None, witness=list(comm) if comm else None
        )
        out.implicative = schemas.PropertyOut(
            holds=impl is None, witness=list(impl) if impl else None
        )
        out.positive_implicative = schemas.PropertyOut(
            holds=pos is None, witness=list(pos) if pos else None
        )
        out.order = schemas.OrderOut(
            reflexive=order.reflexive,
            antisymmetric=order.antisymmetric,
            transitive=order.transitive,
        )
    return out


def _generate_out(generated: codes.BlockCode) -> schemas.GenerateOut:
    max_symbol = max((s for w in generated.words for s in w), default=0)
    return schemas.GenerateOut(
        alphabet=generated.n,
        length=generated.length,
        words=[list(w) for w in generated.words],
        max_symbol=max_symbol,
    )


def generate(req: schemas.GenerateIn) -> schemas.GenerateOut:
    table = req.table.to_table()
    return _generate_out(bridge.generate_code(table, req.points))


def roundtrip(req: schemas.CodePayload) -> schemas.RoundtripOut:
    code = req.to_code()
    report = codes.validate_admissible(code)
    failures = schemas.ValidationOut.from_report(report).failures
    if not report.admissible:
        return schemas.RoundtripOut(
            admissible=False, failures=failures, stage_failed="validate"
        )
    result = bridge.roundtrip_check(code, validate=False)
    params = schemas.ParamsOut(
        case=result.params.case, size=result.params.size, chain=result.params.chain
    )
    bck = schemas.AxiomsOut.from_report(result.bck)
    stage = None
    if not result.bck.verdict:
        stage = "bck"
    elif not result.contained:
        stage = "containment"
    return schemas.RoundtripOut(
        admissible=True,
        failures=failures,
        stage_failed=stage,
        params=params,
        bck=bck,
        generated=_generate_out(result.generated),
        contained=result.contained,
        missing=[list(w) for w in result.missing],
    )


def ideal_subset(req: schemas.SubsetIn) -> schemas.SubsetOut:
    table = req.table.to_table()
    return schemas.SubsetOut.from_report(ideals.check_subset(table, req.members))


def ideal_enumerate(req: schemas.EnumerateIn) -> schemas.EnumerateOut:
    table = req.table.to_table()
    found = ideals.enumerate_closed_right_ideals(table, max_size=req.max_size)
    return schemas.EnumerateOut(count=len(found), ideals=[list(s) for s in found])


def ideal_candidate(req: schemas.CandidateIn) -> schemas.SubsetOut:
    table = req.table.to_table()
    result = ideals.check_candidate(table, req.m)
    return schemas.SubsetOut.from_report(result.report, note=result.note)


def isomorphism(req: schemas.IsoIn) -> schemas.IsoOut:
    sigma = algebra.are_isomorphic(req.table_a.to_table(), req.table_b.to_table())
    return schemas.IsoOut(
        isomorphic=sigma is not None,
        permutation=list(sigma) if sigma is not None else None,
    )
