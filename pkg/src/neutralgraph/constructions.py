"""Graph operations: subdivision, single-edge division, triangle and
leaf-connecting operations, stub gluing with a regular graph, and doubling.

Original vertices keep their ids; new vertices are appended in a fixed order
documented on each function, so outputs are byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadParams,
    EdgeNotFound,
    EmptyEdgeSet,
    MatchingInfeasible,
    NotRegular,
    SpecViolation,
)
from .graph import EdgeRef, Graph, build, is_connected, is_regular


def _require_edges(g: Graph) -> None:
    if not g.edges:
        raise EmptyEdgeSet("operation needs at least one edge")


def subdivide(g: Graph, s: int = 1) -> Graph:
    """Replace every edge by a path through s new vertices.

    New vertices for edge i (in sorted edge order) get ids n + i*s .. n + i*s + s - 1,
    numbered from the lower endpoint outwards.
    """
    if s < 1:
        raise BadParams(f"s must be >= 1, got {s}")
    _require_edges(g)
    n = g.order
    edges = []
    nxt = n
    for u, v in g.edges:
        prev = u
        for _ in range(s):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, v))
    return build(nxt, edges)


def single_edge_division(g: Graph, e: EdgeRef | tuple[int, int]) -> Graph:
    u, v = sorted(e)
    if not g.has_edge(u, v):
        raise EdgeNotFound(f"({u}, {v}) is not an edge")
    w = g.order
    edges = [x for x in g.edges if x != (u, v)]
    edges += [(u, w), (w, v)]
    return build(g.order + 1, edges)


def triangle_op(g: Graph) -> Graph:
    """Keep every edge uv and add a new vertex adjacent to both u and v.

    The vertex for the i-th sorted edge gets id n + i.
    """
    _require_edges(g)
    n = g.order
    edges = list(g.edges)
    for i, (u, v) in enumerate(g.edges):
        edges.append((u, n + i))
        edges.append((v, n + i))
    return build(n + g.size, edges)


LEAF_PAIRINGS = ("sequential", "offset")


def leaf_connect(g: Graph, pairing: str = "sequential") -> Graph:
    """Hang d_v fresh leaves on every vertex v, then match the leaves up.

    Leaves are created vertex by vertex (vertex 0 first) and numbered n, n+1, ...
    With ``pairing="sequential"`` leaf 2i is matched to leaf 2i+1; ``"offset"``
    matches leaf i to leaf i+m instead. Every leaf ends with degree 2 and every
    original vertex with degree 2*d_v.
    """
    _require_edges(g)
    if pairing not in LEAF_PAIRINGS:
        raise BadParams(f"unknown pairing {pairing!r}")
    n = g.order
    edges = list(g.edges)
    leaves = []
    for v in range(n):
        for _ in range(g.degrees[v]):
            w = n + len(leaves)
            leaves.append(w)
            edges.append((v, w))
    m = g.size
    if pairing == "sequential":
        pairs = [(leaves[2 * i], leaves[2 * i + 1]) for i in range(m)]
    else:
        pairs = [(leaves[i], leaves[i + m]) for i in range(m)]
    edges.extend(pairs)
    return build(n + 2 * m, edges)


def ominus(g: Graph) -> Graph:
    """Double g: a copy on ids n..2n-1 plus cross edges u -- v' and v -- u'."""
    _require_edges(g)
    n = g.order
    edges = []
    for u, v in g.edges:
        edges.append((u, v))
        edges.append((u + n, v + n))
        edges.append((u, v + n))
        edges.append((v, u + n))
    return build(2 * n, edges)


@dataclass(frozen=True)
class OplusSpec:
    """Stub parameters for gluing a graph to a k-regular partner.

    Each endpoint occurrence in the first graph carries ``alpha - 1`` stubs;
    each vertex of the regular graph carries ``beta`` stubs.
    """

    alpha: int
    beta: int
    k: int


def check_oplus_spec(g1: Graph, g2: Graph, spec: OplusSpec) -> None:
    """Raise SpecViolation or NotRegular unless all ratio conditions hold exactly."""
    if spec.alpha < 2 or spec.beta < 1:
        raise SpecViolation(f"need alpha >= 2 and beta >= 1, got {spec}")
    k = is_regular(g2)
    if k is None:
        raise NotRegular("second graph must be regular")
    if k != spec.k:
        raise SpecViolation(f"second graph is {k}-regular, spec says k={spec.k}")
    _require_edges(g1)
    v1, e1, v2, e2 = g1.order, g1.size, g2.order, g2.size
    a1 = spec.alpha - 1
    if 2 * a1 * e1 != spec.beta * v2:
        raise SpecViolation(
            f"stub counts differ: 2(alpha-1)|E1| = {2 * a1 * e1}, beta|V2| = {spec.beta * v2}"
        )
    ratios = {
        "|E2|/|E1|": Fraction(e2, e1),
        "(alpha-1)^2": Fraction(a1 * a1),
        "(k/beta)^2": Fraction(spec.k, spec.beta) ** 2,
        "(|V2|/|V1|)^2": Fraction(v2, v1) ** 2,
    }
    if len(set(ratios.values())) != 1:
        shown = ", ".join(f"{name}={val}" for name, val in ratios.items())
        raise SpecViolation(f"ratio conditions fail: {shown}")


def derive_oplus_spec(g1: Graph, alpha: int) -> tuple[OplusSpec, int]:
    """The only (beta, k, |V2|) compatible with g1 and alpha.

    The ratio conditions force beta = 2|E1|/|V1|, k = (alpha-1)*beta and
    |V2| = (alpha-1)*|V1|. Returns (spec, |V2|); raises SpecViolation when
    beta is not an integer.
    """
    if alpha < 2:
        raise SpecViolation(f"alpha must be >= 2, got {alpha}")
    _require_edges(g1)
    beta = Fraction(2 * g1.size, g1.order)
    k = (alpha - 1) * beta
    if beta.denominator != 1:
        raise SpecViolation(
            f"required beta = 2|E1|/|V1| = {beta} and k = {k} are not integers"
        )
    return OplusSpec(alpha, int(beta), int(k)), (alpha - 1) * g1.order


def oplus(g1: Graph, g2: Graph, spec: OplusSpec) -> Graph:
    """Glue g1 to the k-regular g2 by merging stubs into bridge edges.

    g1 keeps ids 0..n1-1 and g2 is shifted to n1..n1+n2-1. Stubs of g1 are
    taken in (vertex, incident-edge rank) order. Stubs of g2 are dealt
    round-robin, one per vertex per round. Each g1 stub takes the next free
    g2 stub whose vertex is not yet bridged to it, scanning forward.
    """
    check_oplus_spec(g1, g2, spec)
    if not is_connected(g1):
        raise SpecViolation("first graph must be connected")
    n1 = g1.order
    g2_stubs = [n1 + w for _ in range(spec.beta) for w in range(g2.order)]
    used = [False] * len(g2_stubs)
    cursor = 0
    bridges = []
    for u in range(n1):
        partners: set[int] = set()
        for _ in range(g1.degrees[u] * (spec.alpha - 1)):
            for step in range(len(g2_stubs)):
                j = (cursor + step) % len(g2_stubs)
                if not used[j] and g2_stubs[j] not in partners:
                    break
            else:
                raise MatchingInfeasible(f"no admissible stub left for vertex {u}")
            used[j] = True
            partners.add(g2_stubs[j])
            bridges.append((u, g2_stubs[j]))
            cursor = (j + 1) % len(g2_stubs)
    edges = list(g1.edges)
    edges += [(n1 + a, n1 + b) for a, b in g2.edges]
    edges += bridges
    return build(n1 + g2.order, edges)
