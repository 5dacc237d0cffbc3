"""Index-based data structures over a fixed range ``1..n``."""

from .lists import IndexList, DisjointLists
from .dsets import DisjointSets
from .heaps import DHeap, LeftistHeaps, FibHeap
from .dtrees import DynamicTrees

__all__ = [
    "IndexList",
    "DisjointLists",
    "DisjointSets",
    "DHeap",
    "LeftistHeaps",
    "FibHeap",
    "DynamicTrees",
]
