"""Exhaustive labeled enumeration of small connected graphs and trees.

A graph on n vertices is encoded as an edge mask over the C(n, 2) vertex
pairs in lexicographic order, bit i standing for the i-th pair. Bulk work
(connectivity, degree statistics) is vectorized over blocks of masks with
numpy; :func:`connected_graphs` streams Graph objects for callers that want
them one by one.
"""

from __future__ import annotations

import heapq
import itertools
from collections import Counter
from math import comb
from typing import Iterator, Sequence

import numpy as np

from .assortativity import (
    ASSORTATIVE,
    DISASSORTATIVE,
    NEUTRAL,
    UNDEFINED_REGULAR,
    classify,
)
from .errors import BadCode, OrderUnsupported
from .graph import Graph, build

MAX_GRAPH_ORDER = 8
MAX_TREE_ORDER = 10
BLOCK = 1 << 20


def pair_list(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def mask_to_graph(n: int, mask: int) -> Graph:
    pairs = pair_list(n)
    return build(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def graph_to_mask(g: Graph) -> int:
    index = {p: i for i, p in enumerate(pair_list(g.order))}
    mask = 0
    for e in g.edges:
        mask |= 1 << index[e]
    return mask


def _check_order(n: int, lo: int = 2, hi: int = MAX_GRAPH_ORDER) -> None:
    if not lo <= n <= hi:
        raise OrderUnsupported(f"order {n} outside supported range {lo}..{hi}")


def _neighbor_sets(n: int, masks: np.ndarray) -> list[np.ndarray]:
    nb = [np.zeros(masks.shape, dtype=np.int64) for _ in range(n)]
    for i, (u, v) in enumerate(pair_list(n)):
        bit = (masks >> i) & 1
        nb[u] |= bit << v
        nb[v] |= bit << u
    return nb


def _connected_block(n: int, masks: np.ndarray) -> np.ndarray:
    nb = _neighbor_sets(n, masks)
    reach = np.ones(masks.shape, dtype=np.int64)
    full = (1 << n) - 1
    for _ in range(n - 1):
        grown = reach.copy()
        for v in range(n):
            grown |= np.where((reach >> v) & 1, nb[v], 0)
        if np.array_equal(grown, reach):
            break
        reach = grown
    return reach == full


def connected_mask_blocks(n: int) -> Iterator[np.ndarray]:
    """Yield ascending blocks of masks of connected labeled graphs on n vertices."""
    _check_order(n)
    total = 1 << comb(n, 2)
    for start in range(0, total, BLOCK):
        masks = np.arange(start, min(total, start + BLOCK), dtype=np.int64)
        yield masks[_connected_block(n, masks)]


def connected_graphs(n: int) -> Iterator[Graph]:
    """Every labeled connected simple graph on n vertices, ascending mask order."""
    pairs = pair_list(n)
    bits = range(len(pairs))
    for block in connected_mask_blocks(n):
        for mask in block.tolist():
            yield Graph(n, tuple(pairs[i] for i in bits if mask >> i & 1))


def count_connected(n: int) -> int:
    return sum(len(b) for b in connected_mask_blocks(n))


def block_stats(n: int, masks: np.ndarray) -> dict[str, np.ndarray]:
    """Vectorized degree sequences and (m, P, S, Q, N, D) for a block of masks."""
    pairs = pair_list(n)
    deg = np.zeros((len(masks), n), dtype=np.int64)
    bits = [(masks >> i) & 1 for i in range(len(pairs))]
    for bit, (u, v) in zip(bits, pairs):
        deg[:, u] += bit
        deg[:, v] += bit
    m = deg.sum(axis=1) // 2
    P = np.zeros(len(masks), dtype=np.int64)
    for bit, (u, v) in zip(bits, pairs):
        P += bit * deg[:, u] * deg[:, v]
    S = (deg**2).sum(axis=1)
    Q = (deg**3).sum(axis=1)
    return {
        "deg": deg,
        "m": m,
        "P": P,
        "S": S,
        "Q": Q,
        "N": 4 * m * P - S * S,
        "D": 2 * m * Q - S * S,
    }


def classify_counts(n: int) -> Counter:
    """Tally of classification tags over all connected graphs on n vertices."""
    tally: Counter = Counter()
    for block in connected_mask_blocks(n):
        st = block_stats(n, block)
        N, D = st["N"], st["D"]
        tally[UNDEFINED_REGULAR] += int(np.count_nonzero(D == 0))
        tally[NEUTRAL] += int(np.count_nonzero((N == 0) & (D > 0)))
        tally[ASSORTATIVE] += int(np.count_nonzero((N > 0) & (D > 0)))
        tally[DISASSORTATIVE] += int(np.count_nonzero((N < 0) & (D > 0)))
    return tally


# -- trees -------------------------------------------------------------------


def prufer_decode(code: Sequence[int], n: int | None = None) -> Graph:
    """Labeled tree for a Prüfer code; n defaults to len(code) + 2."""
    if n is None:
        n = len(code) + 2
    if n < 2 or len(code) != n - 2:
        raise BadCode(f"code of length {len(code)} does not describe a tree on {n} vertices")
    for x in code:
        if not 0 <= x < n:
            raise BadCode(f"label {x} outside 0..{n - 1}")
    deg = [1] * n
    for x in code:
        deg[x] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return build(n, edges)


def prufer_encode(g: Graph) -> tuple[int, ...]:
    adj = [set(a) for a in g.adjacency()]
    leaves = [v for v in range(g.order) if len(adj[v]) == 1]
    heapq.heapify(leaves)
    code = []
    for _ in range(g.order - 2):
        leaf = heapq.heappop(leaves)
        (parent,) = adj[leaf]
        code.append(parent)
        adj[parent].discard(leaf)
        if len(adj[parent]) == 1:
            heapq.heappush(leaves, parent)
    return tuple(code)


def prufer_decode_block(n: int, codes: np.ndarray) -> np.ndarray:
    """Decode a (B, n-2) array of codes into a (B, n-1, 2) array of edges."""
    B = len(codes)
    rows = np.arange(B)
    deg = np.ones((B, n), dtype=np.int64)
    for j in range(n - 2):
        np.add.at(deg, (rows, codes[:, j]), 1)
    edges = np.empty((B, n - 1, 2), dtype=np.int64)
    for j in range(n - 2):
        leaf = np.argmax(deg == 1, axis=1)
        parent = codes[:, j]
        edges[:, j, 0] = leaf
        edges[:, j, 1] = parent
        deg[rows, leaf] = 0
        deg[rows, parent] -= 1
    rest = np.argsort(deg != 1, axis=1, kind="stable")[:, :2]
    edges[:, n - 2, 0] = rest[:, 0]
    edges[:, n - 2, 1] = rest[:, 1]
    return np.sort(edges, axis=2)


def prufer_code_blocks(n: int) -> Iterator[np.ndarray]:
    """All n**(n-2) codes in lexicographic order, in blocks."""
    total = n ** (n - 2)
    for start in range(0, total, BLOCK):
        idx = np.arange(start, min(total, start + BLOCK), dtype=np.int64)
        codes = np.empty((len(idx), n - 2), dtype=np.int64)
        for j in range(n - 3, -1, -1):
            codes[:, j] = idx % n
            idx = idx // n
        yield codes


def labeled_trees(n: int) -> Iterator[Graph]:
    """All n**(n-2) labeled trees, in lexicographic Prüfer-code order."""
    _check_order(n, 2, MAX_TREE_ORDER)
    if n == 2:
        yield build(2, [(0, 1)])
        return
    for codes in prufer_code_blocks(n):
        for row in prufer_decode_block(n, codes).tolist():
            yield build(n, row)


def _tree_block_neutral(n: int, edges: np.ndarray) -> np.ndarray:
    B = len(edges)
    deg = np.zeros((B, n), dtype=np.int64)
    rows = np.repeat(np.arange(B), n - 1)
    np.add.at(deg, (rows, edges[:, :, 0].ravel()), 1)
    np.add.at(deg, (rows, edges[:, :, 1].ravel()), 1)
    du = np.take_along_axis(deg, edges[:, :, 0], axis=1)
    dv = np.take_along_axis(deg, edges[:, :, 1], axis=1)
    m = n - 1
    P = (du * dv).sum(axis=1)
    S = (deg**2).sum(axis=1)
    Q = (deg**3).sum(axis=1)
    return (4 * m * P - S * S == 0) & (2 * m * Q - S * S > 0)


FAMILIES = ("all-connected", "trees")


def find_neutral(n: int, family: str = "all-connected") -> list[Graph]:
    """All labeled members of the family on n vertices that classify neutral.

    Labeled duplicates (isomorphic copies) are kept; see :func:`dedupe_isomorphic`.
    """
    if family == "all-connected":
        _check_order(n, 2, MAX_GRAPH_ORDER)
        found = []
        for block in connected_mask_blocks(n):
            st = block_stats(n, block)
            hit = block[(st["N"] == 0) & (st["D"] > 0)]
            found.extend(mask_to_graph(n, int(x)) for x in hit)
    elif family == "trees":
        _check_order(n, 2, MAX_TREE_ORDER)
        if n < 3:
            return []
        found = []
        for codes in prufer_code_blocks(n):
            edges = prufer_decode_block(n, codes)
            for row in edges[_tree_block_neutral(n, edges)].tolist():
                found.append(build(n, row))
    else:
        raise OrderUnsupported(f"unknown family {family!r}; expected one of {FAMILIES}")
    # vectorized screen above; the exact scalar path has the last word
    return [g for g in found if classify(g).tag == NEUTRAL]


# -- isomorphism classes -----------------------------------------------------


def canonical_form(g: Graph) -> tuple[int, int]:
    """(order, minimum edge mask over all vertex permutations). n <= 8."""
    _check_order(g.order, 1, MAX_GRAPH_ORDER)
    n = g.order
    index = {p: i for i, p in enumerate(pair_list(n))}
    best = None
    for perm in itertools.permutations(range(n)):
        mask = 0
        for u, v in g.edges:
            a, b = perm[u], perm[v]
            mask |= 1 << (index[(a, b)] if a < b else index[(b, a)])
        if best is None or mask < best:
            best = mask
    return n, best


def _invariant(g: Graph) -> tuple:
    d = g.degrees
    return (g.order, g.size, tuple(sorted(d)), tuple(sorted(tuple(sorted((d[u], d[v]))) for u, v in g.edges)))


def dedupe_isomorphic(graphs: Sequence[Graph]) -> list[Graph]:
    """One representative per isomorphism class, first occurrence kept."""
    seen: dict[tuple, set] = {}
    out = []
    for g in graphs:
        key = _invariant(g)
        bucket = seen.setdefault(key, set())
        canon = canonical_form(g)
        if canon not in bucket:
            bucket.add(canon)
            out.append(g)
    return out


def nonisomorphic_trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class on n vertices (networkx generator)."""
    import networkx as nx

    if n == 1:
        yield build(1, [])
        return
    for t in nx.nonisomorphic_trees(n):
        yield build(n, t.edges())


def nonisomorphic_connected(n: int) -> Iterator[Graph]:
    """One connected graph per isomorphism class, n <= 7 (networkx atlas)."""
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    _check_order(n, 1, 7)
    for h in graph_atlas_g():
        if h.number_of_nodes() == n and nx.is_connected(h):
            yield build(n, h.edges())
