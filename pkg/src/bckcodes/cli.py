"""Command-line front end.

Each command parses its input files, delegates to the same handler the HTTP
service uses, and renders the response either as text or as the handler's
JSON document (--format json).  Exit codes: 0 when the checked property
holds, 1 when it fails (witnesses printed), 2 for unusable input or usage
errors.  A failing verdict is never reported with exit 0.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ParseError, SearchCapExceeded
from .formats import (
    element_label,
    parse_code_file,
    parse_table_file,
    render_table_grid,
    render_words,
    serialize_code_file,
    serialize_table_file,
)
from .service import handlers, schemas

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}")


def _load_code(path: str) -> schemas.CodePayload:
    return schemas.CodePayload.from_code(parse_code_file(_read(path)))


def _load_table(path: str) -> schemas.TablePayload:
    table = parse_table_file(_read(path))
    return schemas.TablePayload(entries=[list(row) for row in table.entries])


def _emit(args, result, text_lines) -> None:
    if args.format == "json":
        print(result.model_dump_json(indent=2))
    else:
        for line in text_lines:
            print(line)


def _failure_lines(failures) -> list[str]:
    return [
        f"  {f.rule}: word {f.word}, position {f.position}" for f in failures
    ]


def _violation_lines(violations) -> list[str]:
    return [
        "  axiom {} fails at ({})".format(
            v.axiom, ", ".join(element_label(x) for x in v.witness)
        )
        for v in violations
    ]


def cmd_validate(args) -> int:
    result = handlers.validate_code(_load_code(args.codefile))
    lines = ["admissible" if result.admissible else "not admissible"]
    lines += _failure_lines(result.failures)
    _emit(args, result, lines)
    return EXIT_OK if result.admissible else EXIT_FAIL


def cmd_build(args) -> int:
    req = schemas.BuildIn(code=_load_code(args.codefile), validate_code=not args.force)
    result = handlers.build(req)
    if result.matrix is None:
        _emit(args, result, ["not admissible"] + _failure_lines(result.failures))
        return EXIT_FAIL
    from .algebra import CayleyTable

    table = CayleyTable.from_rows(result.matrix)
    if args.emit == "table":
        lines = [render_table_grid(table, labeled=True)]
    else:
        lines = [serialize_table_file(table).rstrip("\n")]
    if not result.admissible:
        lines.append("# warning: code is not admissible; table may fail the axioms")
    if result.bck and not result.bck.passed:
        lines.append("# warning: table is not a BCK-algebra")
    _emit(args, result, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    req = schemas.VerifyIn(
        table=_load_table(args.tablefile),
        axioms=args.axioms,
        properties=args.properties,
    )
    result = handlers.verify(req)
    lines = [f"{result.axioms}: {'PASS' if result.passed else 'FAIL'}"]
    lines += _violation_lines(result.violations)
    if args.properties:
        for name, prop in (
            ("commutative", result.commutative),
            ("implicative", result.implicative),
            ("positive implicative", result.positive_implicative),
        ):
            if prop.holds:
                lines.append(f"{name}: true")
            else:
                witness = ", ".join(element_label(x) for x in prop.witness)
                lines.append(f"{name}: false (witness {witness})")
        o = result.order
        lines.append(
            f"order: reflexive={o.reflexive} antisymmetric={o.antisymmetric} "
            f"transitive={o.transitive}"
        )
    _emit(args, result, lines)
    return EXIT_OK if result.passed else EXIT_FAIL


def _parse_index_list(raw: str, what: str) -> list[int]:
    try:
        values = [int(tok) for tok in raw.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"{what} must be a comma-separated list of integers: {raw!r}")
    if not values:
        raise ParseError(f"{what} must not be empty")
    return values


def cmd_generate(args) -> int:
    req = schemas.GenerateIn(
        table=_load_table(args.tablefile),
        points=_parse_index_list(args.points, "--points"),
    )
    result = handlers.generate(req)
    from .codes import BlockCode

    code = BlockCode.from_words(result.alphabet, result.words, length=result.length)
    lines = [serialize_code_file(code).rstrip("\n")]
    lines.append(f"# max symbol used: {result.max_symbol}")
    _emit(args, result, lines)
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    result = handlers.roundtrip(_load_code(args.codefile))
    lines = [f"validate: {'PASS' if result.admissible else 'FAIL'}"]
    lines += _failure_lines(result.failures)
    if result.admissible:
        lines.append(f"bck: {'PASS' if result.bck.passed else 'FAIL'}")
        lines += _violation_lines(result.bck.violations)
        if result.generated is not None:
            words = [tuple(w) for w in result.generated.words]
            lines.append(f"generated {len(words)} words:")
            lines += ["  " + w for w in render_words(words, digits=True)]
            lines.append(f"containment: {'PASS' if result.contained else 'FAIL'}")
            if result.missing:
                lines += [
                    "  missing " + w
                    for w in render_words([tuple(w) for w in result.missing], digits=True)
                ]
    _emit(args, result, lines)
    return EXIT_OK if result.stage_failed is None else EXIT_FAIL


def _subset_lines(result) -> list[str]:
    lines = [
        f"members: {{{', '.join(element_label(x) for x in result.members)}}}",
        f"contains zero: {result.contains_zero}",
        f"right ideal: {result.right_ideal}",
        f"subalgebra: {result.subalgebra}",
        f"closed right ideal: {result.closed_right_ideal}",
    ]
    for x, y, p in ((w.x, w.y, w.product) for w in result.right_ideal_witnesses[:5]):
        lines.append(
            f"  escapes: {element_label(x)} * {element_label(y)} = {element_label(p)}"
        )
    if result.note:
        lines.append(f"note: {result.note}")
    return lines


def cmd_ideals(args) -> int:
    table = _load_table(args.tablefile)
    if args.subset is not None:
        members = _parse_index_list(args.subset, "--subset")
        result = handlers.ideal_subset(schemas.SubsetIn(table=table, members=members))
        _emit(args, result, _subset_lines(result))
        return EXIT_OK if result.closed_right_ideal else EXIT_FAIL
    if args.candidate is not None:
        result = handlers.ideal_candidate(
            schemas.CandidateIn(table=table, m=args.candidate)
        )
        _emit(args, result, _subset_lines(result))
        return EXIT_OK if result.closed_right_ideal else EXIT_FAIL
    result = handlers.ideal_enumerate(
        schemas.EnumerateIn(table=table, max_size=args.max_size)
    )
    lines = [f"{result.count} closed right ideals"]
    lines += [
        "  {" + ", ".join(element_label(x) for x in s) + "}" for s in result.ideals
    ]
    _emit(args, result, lines)
    return EXIT_OK


def cmd_iso(args) -> int:
    req = schemas.IsoIn(table_a=_load_table(args.tablefile_a), table_b=_load_table(args.tablefile_b))
    result = handlers.isomorphism(req)
    if result.isomorphic:
        lines = ["isomorphic", "permutation: " + " ".join(map(str, result.permutation))]
    else:
        lines = ["not isomorphic"]
    _emit(args, result, lines)
    return EXIT_OK if result.isomorphic else EXIT_FAIL


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("bckcodes.service.app:app", host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bckcodes",
        description="Block codes, BCK-algebras, and the constructions between them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        p.add_argument("--format", choices=["text", "json"], default="text")
        return p

    p = add("validate", cmd_validate, "check a code file against the admissibility rules")
    p.add_argument("codefile")

    p = add("build", cmd_build, "build the Cayley table of a code")
    p.add_argument("codefile")
    p.add_argument("--emit", choices=["matrix", "table"], default="matrix")
    p.add_argument(
        "--force", action="store_true", help="build even if the code is inadmissible"
    )

    p = add("verify", cmd_verify, "check a table against an axiom set")
    p.add_argument("tablefile")
    p.add_argument("--axioms", choices=["bci", "bck", "bck-alt"], default="bck")
    p.add_argument("--properties", action="store_true")

    p = add("generate", cmd_generate, "generate the block code of a table")
    p.add_argument("tablefile")
    p.add_argument("--points", required=True, help="comma-separated element indices")

    p = add("roundtrip", cmd_roundtrip, "validate, build, verify and regenerate")
    p.add_argument("codefile")

    p = add("ideals", cmd_ideals, "check or enumerate closed right ideals")
    p.add_argument("tablefile")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--subset", help="comma-separated element indices")
    group.add_argument("--enumerate", action="store_true")
    group.add_argument(
        "--candidate",
        type=int,
        metavar="M",
        help="check the family {0, 1, r-M, .., r-1}",
    )
    p.add_argument("--max-size", type=int, default=None)

    p = add("iso", cmd_iso, "decide whether two tables are isomorphic")
    p.add_argument("tablefile_a")
    p.add_argument("tablefile_b")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.set_defaults(fn=cmd_serve)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
