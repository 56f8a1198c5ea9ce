"""Command line entry points.

Four subcommands: `check` searches a machine for a violating lasso and
explains it, `explain` ingests an externally produced counterexample,
`export-dot` prints the machine graph, and `serve` starts the HTTP API.
Exit codes: 0 no violation, 1 counterexample found, 2 error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bundle import analyze_violation, bundle_json, statement_lines
from .checker import DEFAULT_BOUND, Counterexample, find_counterexample
from .errors import HyperscopeError, NotViolated
from .formula import parse_formula
from .machine import load_machine, to_dot
from .traces import VarDecl, parse_counterexample


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_decls(path: str) -> list[VarDecl]:
    rows = json.loads(_read(path))
    return [VarDecl(row["name"], row["kind"]) for row in rows]


def _emit(bundle: dict, json_path: str | None) -> None:
    for line in statement_lines(bundle):
        print("  " + line)
    if json_path:
        Path(json_path).write_text(bundle_json(bundle), encoding="utf-8")
        print(f"bundle written to {json_path}")


def cmd_check(args: argparse.Namespace) -> int:
    machine = load_machine(_read(args.machine))
    formula = parse_formula(_read(args.formula))
    result = find_counterexample(machine, formula, args.bound)
    if not isinstance(result, Counterexample):
        print(f"no counterexample with stem+loop <= {result.bound}")
        return 0
    bundle = analyze_violation(formula, result.assignment, machine=machine)
    print(f"counterexample found (stem={bundle['stemLen']}, loop={bundle['loopLen']})")
    _emit(bundle, args.json)
    return 1


def cmd_explain(args: argparse.Namespace) -> int:
    formula = parse_formula(_read(args.formula))
    machine = None if args.machine == "-" else load_machine(_read(args.machine))
    if args.decls:
        decls = _load_decls(args.decls)
    elif machine is not None:
        from .bundle import machine_var_decls

        decls = machine_var_decls(machine)
    else:
        names = sorted({atom for atom, _ in formula.body.atoms()})
        decls = [VarDecl(name, "output") for name in names]
    assignment = parse_counterexample(_read(args.cex), decls)
    if len(assignment.vars) != len(formula.trace_vars):
        raise HyperscopeError(
            f"counterexample lists {len(assignment.vars)} traces, "
            f"formula quantifies {len(formula.trace_vars)}"
        )
    try:
        bundle = analyze_violation(formula, assignment, machine=machine, var_decls=decls)
    except NotViolated:
        print("formula holds on the given traces; nothing to explain")
        return 0
    print(f"violation explained (stem={bundle['stemLen']}, loop={bundle['loopLen']})")
    _emit(bundle, args.json)
    return 1


def cmd_export_dot(args: argparse.Namespace) -> int:
    machine = load_machine(_read(args.machine))
    sys.stdout.write(to_dot(machine))
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(args.data_dir), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperscope",
        description="model-check universal HyperLTL on Moore machines and explain violations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="search for a violating lasso and explain it")
    p.add_argument("machine", help="machine source (.aag circuit or machine JSON)")
    p.add_argument("formula", help="formula file")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="max stem+loop length")
    p.add_argument("--json", metavar="OUT", help="also write the bundle JSON here")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("explain", help="explain an externally produced counterexample")
    p.add_argument("machine", help="machine source, or '-' to explain without a machine")
    p.add_argument("cex", help="counterexample text file")
    p.add_argument("formula", help="formula file")
    p.add_argument(
        "--decls",
        metavar="JSON",
        help="variable declarations [{name, kind}]; defaults to the machine's "
        "(or, without a machine, the formula's atoms as outputs)",
    )
    p.add_argument("--json", metavar="OUT", help="also write the bundle JSON here")
    p.set_defaults(func=cmd_explain)

    p = sub.add_parser("export-dot", help="print the machine as a DOT digraph")
    p.add_argument("machine", help="machine source (.aag circuit or machine JSON)")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("serve", help="start the HTTP API")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--data-dir", default=None, help="workspace root (default: $HYPERSCOPE_DATA or ./data)")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except HyperscopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
