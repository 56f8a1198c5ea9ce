#!/usr/bin/env python3
"""Run the bundled case studies end to end and print their explanations.

Each study pairs a fixture machine with a fixture formula, searches for a
counterexample, and if one is found prints the minimized causes and the
generated explanation statements.
"""

import argparse
import sys
import time
from pathlib import Path

from hyperscope import (
    DEFAULT_BOUND,
    analyze_violation,
    find_counterexample,
    load_machine,
    parse_formula,
    statement_lines,
    validate_bundle,
)
from hyperscope.checker import NoCounterexample

STUDIES = [
    ("information flow", "fig1.json", "od.hltl"),
    ("information flow (circuit)", "fig1.aag", "od.hltl"),
    ("arbiter symmetry", "arbiter.json", "symmetry.hltl"),
    ("drone altitude response", "drone_v1.json", "drone.hltl"),
]


def run_study(title: str, fixtures: Path, machine_file: str, formula_file: str, bound: int) -> None:
    machine = load_machine((fixtures / machine_file).read_text())
    formula = parse_formula((fixtures / formula_file).read_text())
    started = time.perf_counter()
    result = find_counterexample(machine, formula, bound=bound)
    elapsed = time.perf_counter() - started

    print(f"== {title}: {machine_file} |= {formula_file}")
    print(f"   formula: {formula.text}")
    if isinstance(result, NoCounterexample):
        print(f"   no counterexample up to bound {result.bound} ({elapsed:.2f}s)")
        return

    a = result.assignment
    print(f"   violated by a (stem={a.stem_len}, loop={a.loop_len}) lasso pair ({elapsed:.2f}s)")
    for var in a.vars:
        states = " ".join(f"S{s}" for s in result.state_sequences[var])
        print(f"   {var}: {states}")
    bundle = analyze_violation(formula, a, machine=machine)
    validate_bundle(bundle)
    causes = ", ".join(f"{c['atom']}[{c['trace']}]@{c['t']}" for c in bundle["causes"])
    print(f"   causes: {causes}")
    for line in statement_lines(bundle):
        print(f"   {line}")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="lasso length bound")
    parser.add_argument(
        "--fixtures",
        type=Path,
        default=Path(__file__).resolve().parent.parent / "fixtures",
        help="directory holding the fixture machines and formulas",
    )
    args = parser.parse_args(argv)
    for title, machine_file, formula_file in STUDIES:
        run_study(title, args.fixtures, machine_file, formula_file, args.bound)
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
