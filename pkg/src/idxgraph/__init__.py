"""Index-based graph data structures and classical graph algorithms.

Vertices and edges are small positive integers, so the same index can name
an element of a heap, a list partition and a graph at once.  Each problem
module pairs its algorithms with a verifier that returns None for a correct
answer and a short diagnostic otherwise.
"""

from .graph import (
    Digraph,
    FloorFlowGraph,
    FlowGraph,
    Graph,
    GraphFormatError,
    WDigraph,
    WFlowGraph,
    WGraph,
)
from .gen import rand_graph

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "WGraph",
    "Digraph",
    "WDigraph",
    "FlowGraph",
    "WFlowGraph",
    "FloorFlowGraph",
    "GraphFormatError",
    "rand_graph",
]
