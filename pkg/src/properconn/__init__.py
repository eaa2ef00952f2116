"""Proper-path edge colourings: verification, exact search and constructions."""

from .errors import (
    BudgetExceeded,
    ConstructionDefect,
    GraphFormatError,
    PreconditionError,
    ProperConnError,
)
from .graph import Graph, parse_graph6, to_graph6
from .paths import (
    EdgeColoring,
    ProperPath,
    VerificationReport,
    enumerate_proper_paths,
    exists_proper_path,
    find_proper_path,
    has_strong_property,
    is_k_proper_connected,
    is_proper_connected,
)
from .solver import PcResult, pc_exact, pc_k_exact

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "ConstructionDefect",
    "EdgeColoring",
    "Graph",
    "GraphFormatError",
    "PcResult",
    "PreconditionError",
    "ProperConnError",
    "ProperPath",
    "VerificationReport",
    "enumerate_proper_paths",
    "exists_proper_path",
    "find_proper_path",
    "has_strong_property",
    "is_k_proper_connected",
    "is_proper_connected",
    "parse_graph6",
    "pc_exact",
    "pc_k_exact",
    "to_graph6",
]
