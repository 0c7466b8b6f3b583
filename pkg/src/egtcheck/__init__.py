"""Exact triangle-independence, triangle-cover and bipartization numbers of small graphs."""

from .bounds import BoundReport, JoinProfile, recognize_join_of_balanced_bicliques
from .canon import canonical_form
from .enumerate import enumerate_all, enumerate_stream
from .graph import EdgeSet, Graph, Triangle
from .graph6 import decode, encode
from .solvers import SolveResult, alpha1, b, tau, tau_b

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "EdgeSet",
    "Graph",
    "JoinProfile",
    "SolveResult",
    "Triangle",
    "alpha1",
    "b",
    "canonical_form",
    "decode",
    "encode",
    "enumerate_all",
    "enumerate_stream",
    "recognize_join_of_balanced_bicliques",
    "tau",
    "tau_b",
]
