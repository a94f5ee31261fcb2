"""Exception types shared by the solver, oracle and CLI."""

from __future__ import annotations


class ClassViolation(Exception):
    """The input is not (S124, triangle)-free.

    ``check`` names the structural property that failed while solving and
    ``witness`` is a forbidden induced subgraph found in the input.
    """

    def __init__(self, check: str, witness):
        self.check = check
        self.witness = witness
        super().__init__(f"{check} failed; input contains an induced {witness.kind}: {list(witness.vertices)}")


class ContextViolation(Exception):
    """An internal invariant of the decomposition failed on an in-class input."""

    def __init__(self, check: str, detail: str = ""):
        self.check = check
        self.detail = detail
        super().__init__(f"{check}: {detail}" if detail else check)


class ContractViolation(ValueError):
    """A caller broke a documented precondition (for example an invalid bipartition)."""


class OracleBudgetExceeded(RuntimeError):
    pass


class GenerationFailed(RuntimeError):
    """Rejection sampling ran out of retries."""
