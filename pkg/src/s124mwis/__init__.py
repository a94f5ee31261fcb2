"""Exact maximum weight independent set for (S124, triangle)-free graphs."""

from .errors import ClassViolation, ContextViolation, ContractViolation, GenerationFailed, OracleBudgetExceeded
from .graph import WeightedGraph, members, vset
from .recognition import ForbiddenWitness, check_class
from .solver import SolveResult, solve

__all__ = [
    "ClassViolation",
    "ContextViolation",
    "ContractViolation",
    "ForbiddenWitness",
    "GenerationFailed",
    "OracleBudgetExceeded",
    "SolveResult",
    "WeightedGraph",
    "check_class",
    "members",
    "solve",
    "vset",
]
