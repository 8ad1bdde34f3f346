"""Command line interface.

Subcommands: reduce, certify, solve, verify, render, selftest.

Exit codes: 0 success, 1 negative answer (no path, unsolvable, rejected),
2 usage error, 3 malformed input, 4 exhaustive-search capacity exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from importlib import resources

from .errors import CapacityError, SchemaError
from . import certificates, coloring, hampath, reduction, solver
from .puzzle import (
    apply_permutation,
    config_from_json,
    format_sequence,
    make_solved,
    parse_sequence,
)

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_SCHEMA = 3
EXIT_CAPACITY = 4


def _load_json(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from None
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from None


def _emit(doc: dict, out: str | None):
    text = json.dumps(doc, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _to_cubical(doc: dict) -> hampath.CubicalInstance:
    """Accept a cubical, promise grid, or plain grid graph document."""
    if "labels" in doc:
        return hampath.parse_cubical(doc)
    if "vertices" in doc:
        if "s" in doc and "t" in doc:
            inst = hampath.parse_promise_grid(doc)
        else:
            g = hampath.parse_grid_graph(doc)
            try:
                inst = hampath.cycle_to_path(g)
            except ValueError as exc:
                raise SchemaError(str(exc)) from None
        try:
            return hampath.grid_to_cubical(inst)
        except ValueError as exc:
            raise SchemaError(str(exc)) from None
    raise SchemaError("unrecognized input document (no 'labels' or 'vertices')")


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_reduce(args) -> int:
    inst = _to_cubical(_load_json(args.input))
    ri = reduction.reduce_instance(inst, args.kind, args.group)
    _emit(reduction.reduced_to_json(ri), args.output)
    return EXIT_OK


def _cmd_certify(args) -> int:
    inst = _to_cubical(_load_json(args.input))
    ordering = hampath.find_ham_path(inst, bound=args.bound)
    if ordering is None:
        _emit({"ordering": None}, args.output)
        return EXIT_NO
    doc = {"ordering": list(ordering)}
    if args.kind:
        cert = certificates.PathCertificate(ordering)
        if args.kind == reduction.KIND_SQUARE:
            moves = certificates.synthesize_square_solution(inst, cert)
        else:
            moves = certificates.synthesize_cube_solution(inst, cert)
        doc["solution"] = format_sequence(moves)
        doc["k"] = reduction.budget(inst)
    _emit(doc, args.output)
    return EXIT_OK


def _cmd_solve(args) -> int:
    doc = _load_json(args.input)
    budget = solver.SearchBudget(
        max_depth=args.max_depth if args.max_depth is not None else 0,
        node_limit=args.node_limit,
        strategy=args.strategy,
    )
    if "faces" in doc:
        if not args.metric:
            raise SchemaError("a raw configuration input needs --metric")
        start = config_from_json(doc)
        metric = args.metric
        if args.max_depth is None:
            raise SchemaError("a raw configuration input needs --max-depth")
    else:
        ri = reduction.reduced_from_json(doc)
        start = ri.transformation if ri.group else ri.configuration
        metric = ri.metric
        depth = ri.k if args.max_depth is None else min(args.max_depth, ri.k)
        budget = solver.SearchBudget(
            max_depth=depth, node_limit=args.node_limit, strategy=args.strategy
        )
    moves = solver.solve_optimal(start, metric, budget)
    if moves is None:
        _emit({"solvable": False, "max_depth": budget.max_depth}, args.output)
        return EXIT_NO
    _emit(
        {"solvable": True, "length": len(moves), "solution": format_sequence(moves)},
        args.output,
    )
    return EXIT_OK


def _cmd_verify(args) -> int:
    ri = reduction.reduced_from_json(_load_json(args.input))
    if args.moves is not None:
        text = args.moves
    elif args.moves_file is not None:
        with open(args.moves_file) as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    moves = parse_sequence(text.strip(), ri.puzzle_kind, ri.side)
    verdict = certificates.verify_solution(ri, moves)
    _emit(
        {
            "accepted": verdict.accepted,
            "reasons": list(verdict.reasons),
            "length": verdict.length,
        },
        args.output,
    )
    return EXIT_OK if verdict.accepted else EXIT_NO


def _render_target(args):
    doc = _load_json(args.input)
    if args.predict:
        inst = _to_cubical(doc)
        kind = args.kind or reduction.KIND_SQUARE
        if args.predict == "cb":
            if kind == reduction.KIND_SQUARE:
                return coloring.predict_square_cb(inst)
            return coloring.predict_cube_cb(inst)
        return coloring.predict_ct(inst, kind)
    if "faces" in doc:
        return config_from_json(doc)
    ri = reduction.reduced_from_json(doc)
    if ri.configuration is not None:
        return ri.configuration
    return apply_permutation(ri.transformation, make_solved(ri.puzzle_kind, ri.side))


def _cmd_render(args) -> int:
    target = _render_target(args)
    if args.format == "ascii":
        text = coloring.render_ascii(target)
    elif args.format == "svg":
        text = coloring.render_svg(target)
    else:
        if not args.output:
            raise SchemaError("png rendering needs --output")
        coloring.render_png(target, args.output)
        return EXIT_OK
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _selftest_checks(name: str, doc: dict, expect: dict, report_dir):
    """Yield (check name, passed) pairs for one corpus entry."""
    inst = hampath.parse_cubical(doc)
    report = hampath.validate_promise(inst)
    yield "structure", report.structurally_valid

    ordering = hampath.find_ham_path(inst)
    if expect["ordering"] is None:
        yield "no-path", ordering is None
    else:
        yield "ordering", ordering == tuple(expect["ordering"])
    for kind in (reduction.KIND_SQUARE, reduction.KIND_CUBE_SQTM):
        ri = reduction.reduce_instance(inst, kind, group_variant=False)
        yield f"{kind}-side", ri.side == expect[f"{kind}_side"]
        yield f"{kind}-k", ri.k == 2 * inst.n - 1
        pred = coloring.predict_ct(inst, kind)
        yield f"{kind}-coloring", pred.matches(ri.configuration)
        if ordering is not None:
            cert = certificates.PathCertificate(ordering)
            if kind == reduction.KIND_SQUARE:
                moves = certificates.synthesize_square_solution(inst, cert)
            else:
                moves = certificates.synthesize_cube_solution(inst, cert)
            yield f"{kind}-solution", certificates.verify_solution(ri, moves).accepted
        if report_dir is not None:
            coloring.render_png(ri.configuration, str(report_dir / f"{name}-{kind}.png"))
    if expect.get("solve"):
        ri = reduction.reduce_instance(
            inst, reduction.KIND_SQUARE, group_variant=False
        )
        budget = solver.SearchBudget(max_depth=ri.k, strategy="bi")
        found = solver.solve_optimal(ri.configuration, ri.metric, budget)
        yield "square-decide", (found is not None) == (ordering is not None)


def _cmd_selftest(args) -> int:
    from pathlib import Path

    corpus = resources.files("hamcube") / "corpus"
    manifest = json.loads((corpus / "manifest.json").read_text())
    report_dir = None
    if args.report_dir:
        report_dir = Path(args.report_dir)
        report_dir.mkdir(parents=True, exist_ok=True)
    rows = []
    failures = 0
    for entry in manifest["entries"]:
        name = entry["file"]
        doc = json.loads((corpus / name).read_text())
        for check, passed in _selftest_checks(
            name.removesuffix(".json"), doc, entry["expect"], report_dir
        ):
            rows.append((name, check, "pass" if passed else "FAIL"))
            failures += not passed
    writer = csv.writer(sys.stdout)
    writer.writerow(["entry", "check", "result"])
    writer.writerows(rows)
    if report_dir is not None:
        with open(report_dir / "results.csv", "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["entry", "check", "result"])
            w.writerows(rows)
    return EXIT_OK if failures == 0 else EXIT_NO


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamcube",
        description=(
            "Reductions from grid-graph Hamiltonicity to optimally solving "
            "generalized Rubik's Squares and Cubes."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="emit a puzzle instance for an input")
    p.add_argument("input", help="cubical / promise grid / grid graph JSON, or -")
    p.add_argument("--kind", choices=reduction.INSTANCE_KINDS, required=True)
    p.add_argument("--group", action="store_true", help="emit the group variant")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("certify", help="find a Hamiltonian path ordering")
    p.add_argument("input")
    p.add_argument(
        "--kind",
        choices=reduction.INSTANCE_KINDS,
        help="also synthesize the puzzle solution for this instance kind",
    )
    p.add_argument("--bound", type=int, default=hampath.DEFAULT_PATH_BOUND)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("solve", help="optimally solve an instance by search")
    p.add_argument("input", help="reduced instance or raw configuration JSON")
    p.add_argument("--strategy", choices=("uni", "bi"), default="bi")
    p.add_argument("--max-depth", type=int, default=None)
    p.add_argument("--node-limit", type=int, default=10**7)
    p.add_argument("--metric", choices=("flip", "stm", "sqtm"), default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check a move sequence against an instance")
    p.add_argument("input", help="reduced instance JSON")
    p.add_argument("--moves", help="space separated move tokens")
    p.add_argument("--moves-file", help="file with move tokens (default stdin)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("render", help="render a configuration or prediction")
    p.add_argument("input")
    p.add_argument("--format", choices=("ascii", "svg", "png"), default="ascii")
    p.add_argument(
        "--predict",
        choices=("cb", "ct"),
        help="render the predicted coloring of a cubical input",
    )
    p.add_argument("--kind", choices=reduction.INSTANCE_KINDS)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("selftest", help="run the bundled example corpus")
    p.add_argument("--report-dir", help="write results.csv and figures here")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
