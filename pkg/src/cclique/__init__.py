"""Maximal clique enumeration for c-closed graphs."""

from ._accel import BACKEND
from .closure import closure_number, weak_closure_number, weak_closure_order
from .driver import enumerate_cclosed
from .graph import build_graph, read_edge_list

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "build_graph",
    "closure_number",
    "enumerate_cclosed",
    "read_edge_list",
    "weak_closure_number",
    "weak_closure_order",
]
