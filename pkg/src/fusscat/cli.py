"""Command-line front end: ``fusscat {count,enumerate,map,verify,render}``.

Exit codes: 0 ok, 1 verification failure, 2 usage, 3 guard rail,
4 schema violation, 5 invariant violation, 6 I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import bijections as bij
from .dissections import LABELINGS, Dissection, enumerate_dissections, polygon
from .exceptions import FussCatalanError, InstanceTooLarge
from .partitions import StaircasePartition, count_partitions, count_positive, enumerate_partitions
from .render import render
from .shi import ShiTableau, enumerate_regions, phi, phi_inverse
from .verify import run_suite

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_GUARD, EXIT_SCHEMA, EXIT_INVARIANT, EXIT_IO = range(7)

# enumerator-backed commands refuse more objects than this without --force
GUARD_LIMIT = 10**8


class SchemaError(Exception):
    pass


class CliExit(Exception):
    def __init__(self, code, message=""):
        self.code = code
        super().__init__(message)


def _int_field(obj, key):
    v = obj.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise SchemaError(f"field {key!r} must be an integer")
    return v


def _int_list(v, what):
    if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise SchemaError(f"{what} must be a list of integers")
    return v


def parse_object(family: str, obj):
    """Build a library object from its JSON form, separating schema errors
    (exit 4) from invariant violations (exit 5, raised as FussCatalanError)."""
    if not isinstance(obj, dict):
        raise SchemaError("expected a JSON object")
    n, m = _int_field(obj, "n"), _int_field(obj, "m")
    if family == "partition":
        _int_list(obj.get("parts"), "parts")
        return StaircasePartition.from_json(obj)
    if family == "tableau":
        rows = obj.get("rows")
        if not isinstance(rows, list):
            raise SchemaError("rows must be a list of lists")
        for row in rows:
            _int_list(row, "each row")
        return ShiTableau.from_json(obj)
    if family == "dissection":
        if obj.get("labeling") not in LABELINGS:
            raise SchemaError(f"labeling must be one of {LABELINGS}")
        diags = obj.get("diagonals")
        if not isinstance(diags, list):
            raise SchemaError("diagonals must be a list of pairs")
        for d in diags:
            if len(_int_list(d, "each diagonal")) != 2:
                raise SchemaError("each diagonal must have two endpoints")
        return Dissection.from_json(obj)
    if family == "polygon":
        if obj.get("labeling") not in LABELINGS:
            raise SchemaError(f"labeling must be one of {LABELINGS}")
        return polygon(n, m, obj["labeling"])
    raise SchemaError(f"unknown family {family!r}")


def guess_family(obj) -> str:
    if not isinstance(obj, dict):
        raise SchemaError("expected a JSON object")
    if "parts" in obj:
        return "partition"
    if "rows" in obj:
        return "tableau"
    if "diagonals" in obj:
        return "dissection"
    if "labeling" in obj:
        return "polygon"
    raise SchemaError("cannot tell which family this object belongs to")


_MAPS = {
    ("partition", "tableau"): phi_inverse,
    ("tableau", "partition"): phi,
    ("dissection", "partition"): bij.psi,
    ("partition", "dissection"): bij.psi_inverse,
    ("dissection", "tableau"): bij.omega,
    ("tableau", "dissection"): bij.omega_inverse,
}

_REPARSE = {
    StaircasePartition: StaircasePartition.from_json,
    ShiTableau: ShiTableau.from_json,
    Dissection: Dissection.from_json,
}


def map_object(source: str, target: str, obj):
    x = parse_object(source, obj)
    y = x if source == target else _MAPS[source, target](x)
    # re-validate the image through its own JSON reader
    return _REPARSE[type(y)](y.to_json())


def _guard(n, m, force):
    if not force and count_partitions(n, m) > GUARD_LIMIT:
        raise CliExit(EXIT_GUARD, f"{count_partitions(n, m)} objects exceed the guard rail; use --force")


def _emit(text: str, out):
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliExit(EXIT_IO, str(exc)) from None


def _read_json(source):
    try:
        if source is None or source == "-":
            text = sys.stdin.read()
        elif source.lstrip().startswith("{"):
            text = source
        else:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise CliExit(EXIT_IO, str(exc)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None


def cmd_count(args):
    n, m = args.n, args.m
    if args.J and args.family != "refined":
        raise CliExit(EXIT_USAGE, "--J is only valid with --family refined")
    if args.family == "partitions":
        value = count_partitions(n, m)
    elif args.family == "positive":
        value = count_positive(n, m)
    elif args.family == "refined":
        try:
            value = bij.refined_count(n, m, args.J or [])
        except ValueError as exc:
            raise CliExit(EXIT_USAGE, str(exc)) from None
    else:
        _guard(n, m, args.force)
        if args.family == "regions":
            value = sum(1 for _ in enumerate_regions(n, m))
        else:
            value = sum(1 for _ in enumerate_dissections(n, m, args.labeling))
    if args.json:
        text = json.dumps({"family": args.family, "n": n, "m": m, "count": str(value)})
    else:
        text = str(value)
    _emit(text + "\n", args.out)
    return EXIT_OK


def cmd_enumerate(args):
    n, m = args.n, args.m
    _guard(n, m, args.force)
    if args.family == "partitions":
        stream = enumerate_partitions(n, m)
    elif args.family == "regions":
        stream = enumerate_regions(n, m)
    else:
        stream = enumerate_dissections(n, m, args.labeling)
    _emit("".join(json.dumps(x.to_json()) + "\n" for x in stream), args.out)
    return EXIT_OK


def cmd_map(args):
    obj = _read_json(args.input)
    y = map_object(args.source, args.target, obj)
    _emit(json.dumps(y.to_json()) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args):
    verdicts = run_suite(args.suite, args.n_max, args.m_max)
    failed = [v for v in verdicts if v["status"] != "ok"]
    lines = [json.dumps(v) for v in verdicts]
    lines.append(json.dumps({"summary": {"checks": len(verdicts), "failed": len(failed)}}))
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_render(args):
    obj = _read_json(args.input)
    family = args.family or guess_family(obj)
    svg = render(parse_object(family, obj))
    _emit(svg, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", help="write to this file instead of stdout")

    rank = argparse.ArgumentParser(add_help=False)
    rank.add_argument("-n", type=int, required=True, help="rank")
    rank.add_argument("-m", type=int, required=True, help="Fuss parameter")
    rank.add_argument("--force", action="store_true", help="ignore the guard rail")
    rank.add_argument("--labeling", choices=LABELINGS, default="alternating")

    parser = argparse.ArgumentParser(prog="fusscat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common, rank], help="exact cardinalities")
    p.add_argument("--family", required=True,
                   choices=["partitions", "regions", "dissections", "positive", "refined"])
    p.add_argument("--J", type=int, nargs="*", default=None, help="subset for --family refined")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", parents=[common, rank], help="list objects as JSON lines")
    p.add_argument("--family", required=True, choices=["partitions", "regions", "dissections"])
    p.set_defaults(func=cmd_enumerate)

    families = ["dissection", "partition", "tableau"]
    p = sub.add_parser("map", parents=[common], help="apply a bijection to one object")
    p.add_argument("--from", dest="source", required=True, choices=families)
    p.add_argument("--to", dest="target", required=True, choices=families)
    p.add_argument("input", nargs="?", help="JSON text, a file path, or - for stdin")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("verify", parents=[common], help="run invariant suites")
    p.add_argument("--suite", default="all",
                   choices=["all", "counts", "roundtrip", "walls", "refined", "oracle"])
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--m-max", type=int, default=3)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", parents=[common], help="draw an object as SVG")
    p.add_argument("input", nargs="?", help="JSON text, a file path, or - for stdin")
    p.add_argument("--format", choices=["svg"], default="svg")
    p.add_argument("--family", choices=["partition", "tableau", "dissection", "polygon"])
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for attr in ("n", "m", "n_max", "m_max"):
        if getattr(args, attr, 1) < 1:
            parser.error(f"{attr.replace('_', '-')} must be at least 1")
    try:
        return args.func(args)
    except CliExit as exc:
        if str(exc):
            print(f"fusscat: {exc}", file=sys.stderr)
        return exc.code
    except InstanceTooLarge as exc:
        print(f"fusscat: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except SchemaError as exc:
        print(f"fusscat: schema error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except FussCatalanError as exc:
        print(f"fusscat: invalid object: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
