"""Shared exception types.

Every domain error raised by this package derives from HyperscopeError so
callers (CLI, HTTP layer) can map them to exit codes / status codes in one
place.
"""


class HyperscopeError(Exception):
    """Base class for all domain errors."""


# --- formulas ---------------------------------------------------------------


class FormulaSyntaxError(HyperscopeError):
    def __init__(self, position: int, expected: str):
        self.position = position
        self.expected = expected
        super().__init__(f"syntax error at column {position}: expected {expected}")


class UnboundTraceVar(HyperscopeError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"trace variable {name!r} is not bound by the quantifier prefix")


class DuplicateTraceVar(HyperscopeError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"trace variable {name!r} is bound twice")


class UnknownId(HyperscopeError):
    def __init__(self, node_id):
        self.node_id = node_id
        super().__init__(f"no subformula with id {node_id!r}")


# --- traces / counterexample listings ---------------------------------------


class MalformedLine(HyperscopeError):
    def __init__(self, line_no: int, detail: str = ""):
        self.line_no = line_no
        msg = f"malformed counterexample line {line_no}"
        super().__init__(msg + (f": {detail}" if detail else ""))


class UnknownVariable(HyperscopeError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"variable {name!r} is not declared")


class IndexOutOfRange(HyperscopeError):
    pass


# --- evaluation -------------------------------------------------------------


class UnboundAtom(HyperscopeError):
    def __init__(self, atom: str, trace: str):
        self.atom = atom
        self.trace = trace
        super().__init__(f"atom {atom}[{trace}] refers to a trace variable with no bound trace")


# --- circuits / machines ----------------------------------------------------


class BadHeader(HyperscopeError):
    pass


class LiteralOutOfRange(HyperscopeError):
    pass


class NonMonotoneAnd(HyperscopeError):
    pass


class WidthMismatch(HyperscopeError):
    pass


class StateBudgetExceeded(HyperscopeError):
    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"state-space extraction exceeded the budget of {budget} states")


class NonMooreOutput(HyperscopeError):
    """An output of the circuit depends on the current inputs, not just latches."""


class NondeterministicGuards(HyperscopeError):
    def __init__(self, state, valuation):
        self.state = state
        self.valuation = valuation
        super().__init__(f"state {state}: several edges match input valuation {valuation}")


class PartialGuards(HyperscopeError):
    def __init__(self, state, valuation):
        self.state = state
        self.valuation = valuation
        super().__init__(f"state {state}: no edge matches input valuation {valuation}")


# --- checking / explanation -------------------------------------------------


class UnsupportedQuantifier(HyperscopeError):
    pass


class InconsistentTrace(HyperscopeError):
    def __init__(self, position: int, detail: str = ""):
        self.position = position
        msg = f"trace is not a run of the machine (position {position})"
        super().__init__(msg + (f": {detail}" if detail else ""))


class NotViolated(HyperscopeError):
    pass


# --- persistence ------------------------------------------------------------


class UnknownEntity(HyperscopeError):
    def __init__(self, kind: str, entity_id: str):
        self.kind = kind
        self.entity_id = entity_id
        super().__init__(f"unknown {kind} {entity_id!r}")
