"""Exact degree-assortativity toolkit for constructing and checking neutral graphs."""

__version__ = "0.1.0"

from .assortativity import AssortStats, Classification, classify, stats
from .graph import EdgeRef, Graph, build

__all__ = ["AssortStats", "Classification", "EdgeRef", "Graph", "build", "classify", "stats"]
