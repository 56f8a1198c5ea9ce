#!/usr/bin/env python3
"""Generate the wide synthetic counterexample used for desk-scale stress runs.

Writes three files into the output directory: the formula, the variable
declarations, and the counterexample trace text.  The defaults produce the
50-signal, 30-timestep case with a single output pair diverging at step 6.
"""

import argparse
import json
import sys
from pathlib import Path

from hyperscope.casegen import build_scale_case


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=11)
    parser.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "fixtures" / "scale")
    args = parser.parse_args(argv)

    case = build_scale_case(seed=args.seed)
    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / "wide.hltl").write_text(case.formula_text + "\n")
    (args.out / "wide_cex.txt").write_text(case.cex_text)
    decls = [{"name": d.name, "kind": d.kind} for d in case.decls]
    (args.out / "wide_decls.json").write_text(json.dumps(decls, indent=2) + "\n")
    print(f"wrote {args.out}/wide.hltl ({len(case.decls)} declared signals)")
    print(f"expected divergence: {case.diverging_output} at step {case.diverging_step}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
