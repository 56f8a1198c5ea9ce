"""Model checking of universally quantified HyperLTL on finite Moore
machines, with minimal causal explanations for counterexamples.

The pieces compose in pipeline order: parse a formula (`parse_formula`),
obtain a machine (`load_machine`, `extract_moore`, `parse_machine_json`),
search for a violating lasso (`find_counterexample`), and explain it
(`analyze_violation`, or the finer-grained `mark_relevant` / `minimize` /
`generate_statements`).  `WorkbenchStore` and `create_app` add persistence
and the HTTP API; the `hyperscope` console script wraps it all.
"""

from . import errors
from .aiger import AigCircuit, parse_aag
from .bundle import (
    analyze_violation,
    assemble_bundle,
    bundle_json,
    machine_var_decls,
    relevant_columns,
    statement_lines,
    validate_bundle,
)
from .checker import (
    DEFAULT_BOUND,
    Counterexample,
    NoCounterexample,
    find_counterexample,
    replay,
)
from .evaluate import Kleene, eval3, eval_formula, oracle_eval
from .explain import (
    AtomFact,
    CauseSet,
    ExplanationStatement,
    Verdict,
    generate_statements,
    mark_relevant,
    minimize,
    verbalize,
)
from .formula import (
    FormulaNode,
    QuantifiedFormula,
    parse_formula,
    render_formula,
    subformula_at,
    to_polish,
)
from .machine import (
    DotHighlights,
    MooreMachine,
    MooreState,
    extract_moore,
    load_machine,
    machine_json,
    parse_machine_json,
    to_dot,
)
from .service import create_app
from .store import WorkbenchStore
from .traces import (
    LassoTrace,
    TraceAssignment,
    VarDecl,
    parse_counterexample,
    serialize_counterexample,
)

__version__ = "0.1.0"

__all__ = [
    "AigCircuit",
    "AtomFact",
    "CauseSet",
    "Counterexample",
    "DEFAULT_BOUND",
    "DotHighlights",
    "ExplanationStatement",
    "FormulaNode",
    "Kleene",
    "LassoTrace",
    "MooreMachine",
    "MooreState",
    "NoCounterexample",
    "QuantifiedFormula",
    "TraceAssignment",
    "VarDecl",
    "Verdict",
    "WorkbenchStore",
    "analyze_violation",
    "assemble_bundle",
    "bundle_json",
    "create_app",
    "errors",
    "eval3",
    "eval_formula",
    "extract_moore",
    "find_counterexample",
    "generate_statements",
    "load_machine",
    "machine_json",
    "machine_var_decls",
    "mark_relevant",
    "minimize",
    "oracle_eval",
    "parse_aag",
    "parse_counterexample",
    "parse_formula",
    "parse_machine_json",
    "relevant_columns",
    "render_formula",
    "replay",
    "serialize_counterexample",
    "statement_lines",
    "subformula_at",
    "to_dot",
    "to_polish",
    "validate_bundle",
    "verbalize",
    "__version__",
]
