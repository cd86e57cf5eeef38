"""Command-line interface.

Exit codes: 0 when the checked property holds, 1 when it fails, 2 on error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cm import NotAPermutationGraph, is_cm_permutation
from .graph import graph_from_dict, is_well_covered
from .homology import FaceCapExceeded, independence_complex, reisner_cm
from .linalg import parse_field
from .perm import Realizer, check_permutation, perm_graph, perm_graph_id, recognize_permutation_graph
from .poset import graph_dot, hasse_dot, poset_from_dict
from .survey import SurveyMismatch, rows_to_csv, run_survey, summarize
from .upo import NotAComparabilityGraph, is_upo

EXIT_HOLDS, EXIT_FAILS, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=False)


def parse_perm(text: str):
    try:
        return check_permutation(int(tok) for tok in text.replace(" ", "").split(",") if tok)
    except ValueError as exc:
        raise UsageError(f"malformed permutation {text!r}: {exc}") from exc


def _read_json(path: str | None) -> dict:
    try:
        raw = sys.stdin.read() if path in (None, "-") else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError("expected a JSON object")
    return data


def _read_graph(path: str | None):
    data = _read_json(path)
    try:
        return graph_from_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed graph: {exc}") from exc


def cmd_build(args) -> int:
    if args.pi is not None:
        if args.pi1 is not None or args.pi2 is not None:
            raise UsageError("use either --pi or --pi1/--pi2")
        g = perm_graph_id(parse_perm(args.pi))
    else:
        if args.pi1 is None or args.pi2 is None:
            raise UsageError("--pi1 and --pi2 must be given together")
        try:
            g = perm_graph(Realizer(parse_perm(args.pi1), parse_perm(args.pi2)))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    print(dumps(g.to_dict()))
    return EXIT_HOLDS


def cmd_check(args) -> int:
    g = _read_graph(args.input)
    if args.kind == "cm":
        try:
            verdict = is_cm_permutation(g)
        except NotAPermutationGraph as exc:
            raise UsageError(f"{exc}") from exc
        print(dumps(verdict.to_dict()))
        holds = verdict.cm
    elif args.kind == "upo":
        try:
            v = is_upo(g)
        except NotAComparabilityGraph as exc:
            raise UsageError(f"not a comparability graph: {exc}") from exc
        print(dumps(v.to_dict()))
        holds = v.upo
    elif args.kind == "well-covered":
        wc = is_well_covered(g)
        print(dumps({"well_covered": wc.well_covered, "r": wc.r,
                     "witness": [list(s) for s in wc.witness] if wc.witness else None}))
        holds = wc.well_covered
    else:
        res = recognize_permutation_graph(g)
        print(dumps(res.to_dict()))
        holds = res.is_permutation
    return EXIT_HOLDS if holds else EXIT_FAILS


def cmd_oracle(args) -> int:
    g = _read_graph(args.input)
    try:
        fields = [parse_field(f) for f in args.fields.split(",") if f.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if not fields:
        raise UsageError("no fields given")
    try:
        cm, witness = reisner_cm(independence_complex(g), fields, args.cap)
    except FaceCapExceeded as exc:
        raise UsageError(str(exc)) from exc
    print(dumps({"cm": cm, "fields": [f.lower() for f in fields],
                 "witness": witness.to_dict() if witness else None}))
    return EXIT_HOLDS if cm else EXIT_FAILS


def cmd_survey(args) -> int:
    try:
        rows = run_survey(args.n)
    except SurveyMismatch as exc:
        print(f"survey aborted: {exc}", file=sys.stderr)
        print(dumps({"mismatch_pi": list(exc.row.pi)}))
        return EXIT_FAILS
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    try:
        with open(args.out, "w", newline="") as fh:
            fh.write(rows_to_csv(rows))
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from exc
    print(dumps({"n": args.n, **summarize(rows)}))
    return EXIT_HOLDS


def cmd_export(args) -> int:
    data = _read_json(args.input)
    try:
        if "lt" in data:
            text = hasse_dot(poset_from_dict(data))
        elif "edges" in data:
            text = graph_dot(graph_from_dict(data))
        else:
            raise UsageError("input is neither a graph nor a poset")
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed input: {exc}") from exc
    sys.stdout.write(text)
    return EXIT_HOLDS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permcm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a permutation graph as JSON")
    p.add_argument("--pi", help="permutation paired with the identity, e.g. 5,4,6,1,3,2")
    p.add_argument("--pi1", help="first line order")
    p.add_argument("--pi2", help="second line order")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check", help="decide a property of a graph")
    p.add_argument("kind", choices=["cm", "upo", "well-covered", "permutation"])
    p.add_argument("input", nargs="?", help="graph JSON file (default: stdin)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="Reisner-criterion CM oracle")
    p.add_argument("what", choices=["cm"])
    p.add_argument("input", nargs="?", help="graph JSON file (default: stdin)")
    p.add_argument("--fields", default="f2,q", help="comma-separated subset of f2,f3,f5,q")
    p.add_argument("--cap", type=int, default=1 << 20, help="maximum number of faces")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("survey", help="survey G(Id, pi) over all pi in S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("export", help="render a graph or poset as DOT")
    p.add_argument("input", nargs="?", help="graph or poset JSON file (default: stdin)")
    p.add_argument("--format", choices=["dot"], default="dot")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_HOLDS
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
