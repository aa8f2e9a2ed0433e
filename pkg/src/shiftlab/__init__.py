"""Homological shift ideals of monomial ideals: Betti tables, shifts, and power sweeps."""

from .betti import BettiTable, betti_table, graded_invariants, hs
from .errors import (
    AmbientMismatchError,
    ContractViolation,
    ExponentOverflowError,
    ParseError,
    ResourceError,
    ShiftLabError,
    UndefinedInputError,
)
from .linalg import FieldSpec
from .monomial import MonomialIdeal
from .syntax import format_ideal, parse_ideal

__version__ = "0.1.0"

__all__ = [
    "AmbientMismatchError",
    "BettiTable",
    "ContractViolation",
    "ExponentOverflowError",
    "FieldSpec",
    "MonomialIdeal",
    "ParseError",
    "ResourceError",
    "ShiftLabError",
    "UndefinedInputError",
    "betti_table",
    "format_ideal",
    "graded_invariants",
    "hs",
    "parse_ideal",
]
