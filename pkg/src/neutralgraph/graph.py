"""Immutable simple undirected graphs on dense integer labels 0..n-1."""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from typing import Iterable, NamedTuple, Optional

from .errors import DuplicateEdge, LoopRejected, VertexOutOfRange

Edge = tuple[int, int]


class EdgeRef(NamedTuple):
    """An edge of a specific graph, endpoints ordered u < v."""

    u: int
    v: int


class Graph:
    """Simple undirected graph with a sorted canonical edge tuple.

    Instances are created by :func:`build`, which validates the input. The
    constructor itself trusts its arguments and should not be called directly.
    """

    __slots__ = ("order", "edges", "degrees")

    def __init__(self, order: int, edges: tuple[Edge, ...]):
        deg = [0] * order
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "degrees", tuple(deg))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def size(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        i = bisect_left(self.edges, (u, v))
        return i < len(self.edges) and self.edges[i] == (u, v)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.edges == other.edges

    def __hash__(self):
        return hash((self.order, self.edges))

    def __repr__(self):
        return f"Graph(order={self.order}, edges={list(self.edges)})"

    def __reduce__(self):
        return (Graph, (self.order, self.edges))


def build(order: int, edges: Iterable[Iterable[int]]) -> Graph:
    """Validate and canonicalize an edge list into a :class:`Graph`.

    Raises LoopRejected, DuplicateEdge or VertexOutOfRange.
    """
    if order < 1:
        raise VertexOutOfRange(f"order must be >= 1, got {order}")
    norm = []
    for u, v in edges:
        if u == v:
            raise LoopRejected(f"loop at vertex {u}")
        if u > v:
            u, v = v, u
        if u < 0 or v >= order:
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{order - 1}")
        norm.append((u, v))
    norm.sort()
    for i in range(1, len(norm)):
        if norm[i] == norm[i - 1]:
            raise DuplicateEdge(f"duplicate edge {norm[i]}")
    return Graph(order, tuple(norm))


def is_connected(g: Graph) -> bool:
    adj = g.adjacency()
    seen = [False] * g.order
    seen[0] = True
    queue = deque([0])
    reached = 1
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                reached += 1
                queue.append(y)
    return reached == g.order


def is_regular(g: Graph) -> Optional[int]:
    """Return k if every vertex has degree k, else None."""
    first = g.degrees[0]
    if all(d == first for d in g.degrees):
        return first
    return None


def max_degree(g: Graph) -> tuple[int, int]:
    """Return (Delta, number of vertices attaining Delta)."""
    top = max(g.degrees)
    return top, g.degrees.count(top)


def is_tree(g: Graph) -> bool:
    return g.size == g.order - 1 and is_connected(g)


def is_cycle(g: Graph) -> bool:
    return g.order >= 3 and is_regular(g) == 2 and is_connected(g)


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Apply the vertex map v -> perm[v]."""
    return build(g.order, ((perm[u], perm[v]) for u, v in g.edges))
